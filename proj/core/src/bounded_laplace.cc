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

#include "dpcore/bounded_laplace.h"

#include <algorithm>
#include <cmath>

#include "dpcore/errors.h"

namespace dpcore {

namespace {

constexpr double kBisectionRelativeWidth = 1e-12;
constexpr double kBracketFactor = 1e6;

void CheckSensitivity(double sensitivity) {
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    throw ParameterError("sensitivity must be positive and finite");
  }
}

double TargetEpsilon(const PrivacyParams& params) {
  ValidatePrivacyParams(params,
                        {rules::EpsilonOrDeltaPositive(), rules::DeltaBelow(1)},
                        "bounded-domain Laplace");
  return params.epsilon() - std::log1p(-params.delta());
}

}  // namespace

double LaplaceMassInside(double centre, double scale, const Bounds& bounds) {
  // 1 - (e^{-a} + e^{-c}) / 2 written with expm1 so wide scales keep precision.
  const double a = (centre - bounds.lower()) / scale;
  const double c = (bounds.upper() - centre) / scale;
  return -0.5 * (std::expm1(-a) + std::expm1(-c));
}

double BoundedDomainPrivacyLoss(double scale, double sensitivity,
                                const Bounds& bounds) {
  const double at_lower = LaplaceMassInside(bounds.lower(), scale, bounds);
  const double at_upper = LaplaceMassInside(bounds.upper(), scale, bounds);
  const double inner_lower =
      LaplaceMassInside(bounds.lower() + sensitivity, scale, bounds);
  const double inner_upper =
      LaplaceMassInside(bounds.upper() - sensitivity, scale, bounds);
  const double ratio = std::max(inner_lower / at_lower, inner_upper / at_upper);
  return sensitivity / scale + std::log(ratio);
}

double BoundedLaplaceScale(const NumericMechanismConfig& config) {
  CheckSensitivity(config.sensitivity);
  if (!config.bounds.has_value()) {
    throw ParameterError("bounded-domain Laplace requires bounds");
  }
  const Bounds& bounds = *config.bounds;
  if (bounds.width() < config.sensitivity) {
    throw ParameterError(
        "bounded-domain Laplace requires upper - lower >= sensitivity");
  }
  const double target = TargetEpsilon(config.params);
  double lo = config.sensitivity / target;
  double hi = kBracketFactor * lo;
  auto satisfies = [&](double scale) {
    return BoundedDomainPrivacyLoss(scale, config.sensitivity, bounds) <= target;
  };
  if (satisfies(lo)) return lo;
  if (!satisfies(hi)) {
    throw CalibrationError(
        "bounded-domain Laplace: no scale in the search bracket meets epsilon");
  }
  while (hi - lo > kBisectionRelativeWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (satisfies(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

BoundedDomainLaplace::BoundedDomainLaplace(const NumericMechanismConfig& config)
    : bounds_(config.bounds.has_value() ? *config.bounds : Bounds(0, 0)),
      scale_(BoundedLaplaceScale(config)) {}

double BoundedDomainLaplace::Randomise(double value, RandomSource& rng) const {
  if (!bounds_.Contains(value)) {
    throw ParameterError("bounded-domain Laplace input lies outside its domain");
  }
  // Invert the CDF of Laplace(value, scale) restricted to the domain. The two
  // tail masses are computed directly so neither branch subtracts from one.
  const double below = 0.5 * std::exp(-(value - bounds_.lower()) / scale_);
  const double above = 0.5 * std::exp(-(bounds_.upper() - value) / scale_);
  const double inside = std::max(0.0, 1.0 - below - above);
  const double u = rng.Uniform();
  const double p = below + u * inside;
  double x;
  if (p <= 0.5) {
    x = value + scale_ * std::log(2.0 * p);
  } else {
    const double q = above + (1.0 - u) * inside;
    x = value - scale_ * std::log(2.0 * q);
  }
  if (std::isnan(x)) x = value;
  return Truncate(x, bounds_);
}

double BoundedLaplaceRandomise(double value, const NumericMechanismConfig& config,
                               RandomSource& rng) {
  return BoundedDomainLaplace(config).Randomise(value, rng);
}

double BoundedNoiseLimit(const PrivacyParams& params, double sensitivity) {
  ValidatePrivacyParams(params, {rules::DeltaInOpenInterval(0, 0.5)},
                        "bounded-noise Laplace");
  CheckSensitivity(sensitivity);
  if (params.epsilon() == 0) return sensitivity / (2 * params.delta());
  const double scale = sensitivity / params.epsilon();
  return scale *
         std::log1p(std::expm1(params.epsilon()) / (2 * params.delta()));
}

BoundedNoiseLaplace::BoundedNoiseLaplace(const PrivacyParams& params,
                                         double sensitivity)
    : scale_(params.epsilon() > 0 ? sensitivity / params.epsilon() : 0.0),
      limit_(BoundedNoiseLimit(params, sensitivity)) {}

double BoundedNoiseLaplace::Randomise(double value, RandomSource& rng) const {
  const double v = 2.0 * rng.UniformOpen() - 1.0;
  if (scale_ == 0) return value + v * limit_;
  // Symmetric inverse CDF: |noise| is an exponential truncated to [0, limit].
  const double magnitude =
      -scale_ * std::log1p(std::abs(v) * std::expm1(-limit_ / scale_));
  const double noise = std::min(magnitude, limit_);
  return v < 0 ? value - noise : value + noise;
}

double BoundedNoiseLaplaceRandomise(double value, const PrivacyParams& params,
                                    double sensitivity, RandomSource& rng) {
  return BoundedNoiseLaplace(params, sensitivity).Randomise(value, rng);
}

UniformMechanism::UniformMechanism(double delta, double sensitivity)
    : half_width_(BoundedNoiseLimit(PrivacyParams(0.0, delta), sensitivity)) {}

double UniformMechanism::Randomise(double value, RandomSource& rng) const {
  return value + (2.0 * rng.UniformOpen() - 1.0) * half_width_;
}

}  // namespace dpcore
