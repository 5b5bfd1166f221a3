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

#include "dpcore/geometric.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dpcore/errors.h"

namespace dpcore {

namespace {

constexpr double kMaxMagnitude = 1.0e18;

std::int64_t DoubledBound(double bound, bool allow_half) {
  const double doubled = 2.0 * bound;
  if (std::abs(doubled) > kMaxMagnitude) {
    throw ParameterError("geometric bounds out of range");
  }
  if (doubled != std::floor(doubled)) {
    throw ParameterError("geometric bounds must be integers or half-integers");
  }
  if (!allow_half && bound != std::floor(bound)) {
    throw ParameterError("truncated geometric requires integer bounds");
  }
  return static_cast<std::int64_t>(doubled);
}

std::int64_t MagnitudeFromTail(double mass, double decay) {
  const double m = std::floor(std::log(mass * (1.0 + decay)) / std::log(decay));
  return static_cast<std::int64_t>(std::min(m, kMaxMagnitude));
}

}  // namespace

double TwoSidedGeometricPmf(std::int64_t k, double epsilon,
                            std::int64_t sensitivity) {
  const double decay = std::exp(-epsilon / static_cast<double>(sensitivity));
  return (1.0 - decay) / (1.0 + decay) *
         std::pow(decay, static_cast<double>(std::llabs(k)));
}

std::int64_t SampleTwoSidedGeometric(double decay, RandomSource& rng) {
  const double u = rng.UniformOpen();
  // P(Z < 0) = P(Z > 0) = rho / (1 + rho); P(Z <= -m) = rho^m / (1 + rho).
  const double tail = decay / (1.0 + decay);
  if (u < tail) return -MagnitudeFromTail(u, decay);
  const double upper = 1.0 - u;
  if (upper < tail) return MagnitudeFromTail(upper, decay);
  return 0;
}

Geometric::Geometric(const GeometricConfig& config, PostProcess post_process)
    : post_process_(post_process) {
  ValidatePrivacyParams(config.params,
                        {rules::EpsilonPositive(), rules::DeltaZero()},
                        "geometric");
  if (config.sensitivity < 1) {
    throw ParameterError("geometric sensitivity must be an integer >= 1");
  }
  decay_ = std::exp(-config.params.epsilon() /
                    static_cast<double>(config.sensitivity));
  if (post_process_ != PostProcess::kNone) {
    if (!config.bounds.has_value()) {
      throw ParameterError("truncated and folded geometric require bounds");
    }
    const bool allow_half = post_process_ == PostProcess::kFold;
    lower2_ = DoubledBound(config.bounds->lower(), allow_half);
    upper2_ = DoubledBound(config.bounds->upper(), allow_half);
    // The domain must contain at least one integer.
    const std::int64_t first = lower2_ + (lower2_ % 2 != 0 ? 1 : 0);
    if (first > upper2_) {
      throw ParameterError("geometric bounds contain no integer");
    }
  }
}

std::int64_t Geometric::Randomise(std::int64_t value, RandomSource& rng) const {
  const std::int64_t noisy = value + SampleTwoSidedGeometric(decay_, rng);
  switch (post_process_) {
    case PostProcess::kNone:
      return noisy;
    case PostProcess::kTruncate:
      return std::clamp(noisy, lower2_ / 2, upper2_ / 2);
    case PostProcess::kFold:
      break;
  }
  // Fold in doubled units. Reflecting an even number about any integer or
  // half-integer bound gives an even number, so the result is an integer.
  std::int64_t v = 2 * noisy;
  if (lower2_ == upper2_) return lower2_ / 2;
  const std::int64_t width = upper2_ - lower2_;
  if (v < lower2_ || v > upper2_) {
    std::int64_t offset = (v - lower2_) % (2 * width);
    if (offset < 0) offset += 2 * width;
    if (offset > width) offset = 2 * width - offset;
    v = lower2_ + offset;
  }
  // A half-integer can only appear if a bound is hit from outside; round it
  // toward the interior.
  if (v % 2 != 0) v += (v == lower2_) ? 1 : -1;
  return v / 2;
}

std::int64_t Geometric::Randomise(double value, RandomSource& rng) const {
  if (!std::isfinite(value) || value != std::floor(value) ||
      std::abs(value) > kMaxMagnitude / 4) {
    throw ParameterError("geometric mechanism requires an integer input");
  }
  return Randomise(static_cast<std::int64_t>(value), rng);
}

std::int64_t GeometricRandomise(std::int64_t value, const GeometricConfig& config,
                                PostProcess post_process, RandomSource& rng) {
  return Geometric(config, post_process).Randomise(value, rng);
}

}  // namespace dpcore
