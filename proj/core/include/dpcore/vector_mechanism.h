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

#ifndef DPCORE_VECTOR_MECHANISM_H_
#define DPCORE_VECTOR_MECHANISM_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore {

// Objective perturbation for regularised convex ERM.
//
// The training objective J(w) is replaced by
//
//   J(w) + (b . w) / n + (surcharge / 2) ||w||^2
//
// where b has density proportional to exp(-epsilon' ||b|| / 2). The
// calibration follows the classic construction with the per-sample loss
// curvature bound c scaled by g^2 to account for feature vectors of norm up
// to g rather than one.
struct VectorMechanismConfig {
  PrivacyParams params;
  std::size_t dimension = 1;
  // Regularisation coefficient of the objective, lambda in (lambda/2)||w||^2.
  double alpha = 1.0;
  // Bound on the second derivative of the per-sample loss (1/4 for logistic).
  double function_sensitivity = 0.25;
  // Bound on per-sample feature norm.
  double data_sensitivity = 1.0;
  std::size_t n = 1;
};

struct VectorCalibration {
  double epsilon_prime;
  double surcharge;
};

VectorCalibration VectorCalibrate(const VectorMechanismConfig& config);

// A smooth objective over R^d.
struct DifferentiableObjective {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
};

class PerturbedObjective {
 public:
  PerturbedObjective(DifferentiableObjective base, std::vector<double> noise,
                     double surcharge, std::size_t n);

  std::size_t dimension() const { return base_.dimension; }
  const std::vector<double>& noise() const { return noise_; }
  double surcharge() const { return surcharge_; }
  std::size_t n() const { return n_; }

  double Value(std::span<const double> w) const;
  std::vector<double> Gradient(std::span<const double> w) const;

 private:
  DifferentiableObjective base_;
  std::vector<double> noise_;
  double surcharge_;
  std::size_t n_;
};

// Draws b with density proportional to exp(-epsilon_prime ||b|| / 2): the
// norm is Gamma(d, 2 / epsilon_prime), built as a sum of d exponentials, and
// the direction is a normalised Gaussian vector.
std::vector<double> SampleVectorNoise(std::size_t dimension,
                                      double epsilon_prime, RandomSource& rng);

PerturbedObjective VectorRandomise(DifferentiableObjective base,
                                   const VectorMechanismConfig& config,
                                   RandomSource& rng);

}  // namespace dpcore

#endif  // DPCORE_VECTOR_MECHANISM_H_
