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

#include "dpcore/vector_mechanism.h"

#include <cmath>
#include <utility>

#include "dpcore/errors.h"

namespace dpcore {

VectorCalibration VectorCalibrate(const VectorMechanismConfig& config) {
  ValidatePrivacyParams(config.params,
                        {rules::EpsilonPositive(), rules::DeltaZero()},
                        "vector mechanism");
  if (config.dimension < 1) throw ParameterError("dimension must be >= 1");
  if (config.n < 1) throw ParameterError("sample count must be >= 1");
  if (!(config.alpha > 0) || !(config.function_sensitivity > 0) ||
      !(config.data_sensitivity > 0)) {
    throw ParameterError(
        "alpha, function sensitivity and data sensitivity must be positive");
  }
  const double epsilon = config.params.epsilon();
  const double curvature = config.function_sensitivity *
                           config.data_sensitivity * config.data_sensitivity;
  const double ratio = curvature / (static_cast<double>(config.n) * config.alpha);
  const double epsilon_prime = epsilon - std::log1p(2.0 * ratio + ratio * ratio);
  if (epsilon_prime > 0) return {epsilon_prime, 0.0};

  const double surcharge =
      curvature / (static_cast<double>(config.n) * std::expm1(epsilon / 4.0)) -
      config.alpha;
  if (surcharge < 0) {
    throw ParameterError("vector mechanism produced a negative surcharge");
  }
  return {epsilon / 2.0, surcharge};
}

PerturbedObjective::PerturbedObjective(DifferentiableObjective base,
                                       std::vector<double> noise,
                                       double surcharge, std::size_t n)
    : base_(std::move(base)),
      noise_(std::move(noise)),
      surcharge_(surcharge),
      n_(n) {
  if (noise_.size() != base_.dimension) {
    throw DimensionError("noise vector length must match objective dimension");
  }
  if (n_ == 0) throw ParameterError("sample count must be >= 1");
}

double PerturbedObjective::Value(std::span<const double> w) const {
  double linear = 0;
  double squared = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    linear += noise_[i] * w[i];
    squared += w[i] * w[i];
  }
  return base_.value(w) + linear / static_cast<double>(n_) +
         0.5 * surcharge_ * squared;
}

std::vector<double> PerturbedObjective::Gradient(std::span<const double> w) const {
  std::vector<double> grad = base_.gradient(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    grad[i] += noise_[i] / static_cast<double>(n_) + surcharge_ * w[i];
  }
  return grad;
}

std::vector<double> SampleVectorNoise(std::size_t dimension,
                                      double epsilon_prime, RandomSource& rng) {
  if (!(epsilon_prime > 0)) throw ParameterError("epsilon' must be positive");
  double norm = 0;
  for (std::size_t i = 0; i < dimension; ++i) norm += rng.StandardExponential();
  norm *= 2.0 / epsilon_prime;

  std::vector<double> direction(dimension);
  double length = 0;
  do {
    length = 0;
    for (double& x : direction) {
      x = rng.StandardNormal();
      length += x * x;
    }
  } while (length == 0);
  length = std::sqrt(length);
  for (double& x : direction) x *= norm / length;
  return direction;
}

PerturbedObjective VectorRandomise(DifferentiableObjective base,
                                   const VectorMechanismConfig& config,
                                   RandomSource& rng) {
  if (base.dimension != config.dimension) {
    throw DimensionError("objective dimension does not match the config");
  }
  const VectorCalibration calibration = VectorCalibrate(config);
  std::vector<double> noise =
      SampleVectorNoise(config.dimension, calibration.epsilon_prime, rng);
  return PerturbedObjective(std::move(base), std::move(noise),
                            calibration.surcharge, config.n);
}

}  // namespace dpcore
