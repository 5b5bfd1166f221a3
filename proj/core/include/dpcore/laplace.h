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

#ifndef DPCORE_LAPLACE_H_
#define DPCORE_LAPLACE_H_

#include "dpcore/mechanism.h"
#include "dpcore/random.h"

namespace dpcore {

// Scale b = sensitivity / (epsilon - ln(1 - delta)). Reduces to
// sensitivity / epsilon when delta is zero.
double LaplaceScale(const PrivacyParams& params, double sensitivity);

// One Laplace(0, scale) draw by inverting the CDF at a single uniform.
double SampleLaplace(double scale, RandomSource& rng);

// Laplace mechanism with optional truncation or folding onto the configured
// bounds. The three variants share calibration; only post-processing differs.
class Laplace {
 public:
  explicit Laplace(const NumericMechanismConfig& config,
                   PostProcess post_process = PostProcess::kNone);

  double scale() const { return scale_; }
  PostProcess post_process() const { return post_process_; }
  double Randomise(double value, RandomSource& rng) const;

 private:
  double scale_;
  PostProcess post_process_;
  std::optional<Bounds> bounds_;
};

double LaplaceRandomise(double value, const NumericMechanismConfig& config,
                        PostProcess post_process, RandomSource& rng);

}  // namespace dpcore

#endif  // DPCORE_LAPLACE_H_
