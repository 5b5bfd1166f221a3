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

#include "dpcore/staircase.h"

#include <cmath>

#include "dpcore/errors.h"

namespace dpcore {

double StaircaseDefaultGamma(double epsilon) {
  return 1.0 / (1.0 + std::exp(epsilon / 2.0));
}

Staircase::Staircase(const NumericMechanismConfig& config)
    : epsilon_(ValidatePrivacyParams(config.params,
                                     {rules::EpsilonPositive(), rules::DeltaZero()},
                                     "staircase")
                   .epsilon()),
      sensitivity_(config.sensitivity),
      gamma_(config.gamma.value_or(StaircaseDefaultGamma(epsilon_))),
      decay_(std::exp(-epsilon_)),
      inner_step_prob_(gamma_ / (gamma_ + (1.0 - gamma_) * decay_)) {
  if (!(sensitivity_ > 0) || !std::isfinite(sensitivity_)) {
    throw ParameterError("sensitivity must be positive and finite");
  }
  if (!(gamma_ >= 0 && gamma_ <= 1)) {
    throw ParameterError("staircase gamma must lie in [0, 1]");
  }
}

double Staircase::Randomise(double value, RandomSource& rng) const {
  const double sign = rng.Uniform() < 0.5 ? -1.0 : 1.0;
  // P(G = i) = (1 - rho) rho^i by inversion; G = 0 whenever rho underflows.
  double steps = 0;
  if (decay_ > 0) {
    steps = std::floor(std::log(rng.UniformOpen()) / -epsilon_);
  } else {
    rng.UniformOpen();
  }
  const double u = rng.Uniform();
  const bool outer = rng.Uniform() >= inner_step_prob_;
  const double offset =
      outer ? steps + gamma_ + (1.0 - gamma_) * u : steps + gamma_ * u;
  return value + sign * sensitivity_ * offset;
}

double StaircaseRandomise(double value, const NumericMechanismConfig& config,
                          RandomSource& rng) {
  return Staircase(config).Randomise(value, rng);
}

}  // namespace dpcore
