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

#ifndef DPCORE_GEOMETRIC_H_
#define DPCORE_GEOMETRIC_H_

#include <cstdint>
#include <optional>

#include "dpcore/bounds.h"
#include "dpcore/mechanism.h"
#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore {

struct GeometricConfig {
  PrivacyParams params;
  std::int64_t sensitivity = 1;
  // Integer bounds for truncation; integer or half-integer for folding.
  std::optional<Bounds> bounds;
};

// P(Z = k) = (1 - rho) / (1 + rho) * rho^|k| with rho = e^{-epsilon / sensitivity}.
double TwoSidedGeometricPmf(std::int64_t k, double epsilon,
                            std::int64_t sensitivity);

// One draw of the two-sided geometric law with ratio `decay` (rho), by
// inverting its CDF at a single uniform.
std::int64_t SampleTwoSidedGeometric(double decay, RandomSource& rng);

// Geometric mechanism (plain, truncated or folded onto the bounds).
class Geometric {
 public:
  Geometric(const GeometricConfig& config, PostProcess post_process);

  double decay() const { return decay_; }
  std::int64_t Randomise(std::int64_t value, RandomSource& rng) const;
  // Throws ParameterError unless `value` is integral.
  std::int64_t Randomise(double value, RandomSource& rng) const;

 private:
  double decay_;
  PostProcess post_process_;
  // Bounds doubled so half-integers become exact integers.
  std::int64_t lower2_ = 0;
  std::int64_t upper2_ = 0;
};

std::int64_t GeometricRandomise(std::int64_t value, const GeometricConfig& config,
                                PostProcess post_process, RandomSource& rng);

}  // namespace dpcore

#endif  // DPCORE_GEOMETRIC_H_
