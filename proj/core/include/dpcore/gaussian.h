// Copyright 2026 The dpcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPCORE_GAUSSIAN_H_
#define DPCORE_GAUSSIAN_H_

#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore {

// Standard normal CDF.
double NormalCdf(double x);

// Classical calibration sigma = sensitivity * sqrt(2 ln(1.25 / delta)) /
// epsilon. Valid only for 0 < epsilon <= 1 and 0 < delta <= 1.
double GaussianSigma(const PrivacyParams& params, double sensitivity);

// Result of the analytic calibration, kept for inspection and testing.
struct AnalyticGaussianCalibration {
  double sigma;
  // Which branch of the calibration was taken (delta >= delta_0).
  bool upper_branch;
  // Root of the branch equation and its residual |B(root) - delta|.
  double root;
  double residual;
};

// Tight calibration for any epsilon > 0 and 0 < delta < 1: the smallest
// sigma whose privacy profile at `sensitivity` meets (epsilon, delta). The
// branch equation is solved by doubling a bracket, then bisecting until the
// residual is at most 1e-12.
AnalyticGaussianCalibration CalibrateAnalyticGaussian(const PrivacyParams& params,
                                                      double sensitivity);
double AnalyticGaussianSigma(const PrivacyParams& params, double sensitivity);

// value + sigma * Z with Z drawn by Box-Muller.
double GaussianRandomise(double value, double sigma, RandomSource& rng);

// Gaussian mechanism; `analytic` selects the calibration.
class Gaussian {
 public:
  Gaussian(const PrivacyParams& params, double sensitivity, bool analytic);

  double sigma() const { return sigma_; }
  double Randomise(double value, RandomSource& rng) const {
    return GaussianRandomise(value, sigma_, rng);
  }

 private:
  double sigma_;
};

}  // namespace dpcore

#endif  // DPCORE_GAUSSIAN_H_
