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

#include "dpcore/gaussian.h"

#include <cmath>
#include <functional>
#include <numbers>

#include "dpcore/errors.h"

namespace dpcore {

namespace {

constexpr double kResidualTolerance = 1e-12;
constexpr int kMaxDoublings = 1000;
constexpr int kMaxBisections = 2000;

void CheckSensitivity(double sensitivity) {
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    throw ParameterError("sensitivity must be positive and finite");
  }
}

// e^epsilon * Phi(-x), evaluated in log space so large epsilon cannot
// overflow before the tail probability shrinks it.
double ScaledLowerTail(double epsilon, double x) {
  const double tail = NormalCdf(-x);
  if (tail == 0) return 0;
  return std::exp(epsilon + std::log(tail));
}

struct Root {
  double value;
  double residual;
};

// Solves f(t) = target for t >= 0 where f is monotone with f(0) on the
// opposite side of `target` from f(infinity). `increasing` selects the
// direction.
Root SolveMonotone(const std::function<double(double)>& f, double target,
                   bool increasing) {
  auto below_target = [&](double t) {
    return increasing ? f(t) < target : f(t) > target;
  };
  double lo = 0;
  double hi = 1;
  int doublings = 0;
  while (below_target(hi)) {
    lo = hi;
    hi *= 2;
    if (++doublings > kMaxDoublings) {
      throw CalibrationError("analytic Gaussian: bracketing failed");
    }
  }
  Root best{hi, std::abs(f(hi) - target)};
  if (std::abs(f(lo) - target) < best.residual) {
    best = {lo, std::abs(f(lo) - target)};
  }
  for (int i = 0; i < kMaxBisections && best.residual > kResidualTolerance;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = f(mid);
    const double residual = std::abs(value - target);
    if (residual < best.residual) best = {mid, residual};
    if (below_target(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double GaussianSigma(const PrivacyParams& params, double sensitivity) {
  ValidatePrivacyParams(
      params,
      {rules::EpsilonPositive(), rules::EpsilonAtMost(1), rules::DeltaPositive()},
      "classical Gaussian");
  CheckSensitivity(sensitivity);
  return sensitivity * std::sqrt(2.0 * std::log(1.25 / params.delta())) /
         params.epsilon();
}

AnalyticGaussianCalibration CalibrateAnalyticGaussian(const PrivacyParams& params,
                                                      double sensitivity) {
  ValidatePrivacyParams(
      params,
      {rules::EpsilonPositive(), rules::DeltaPositive(), rules::DeltaBelow(1)},
      "analytic Gaussian");
  CheckSensitivity(sensitivity);
  const double epsilon = params.epsilon();
  const double delta = params.delta();

  const double delta_zero =
      NormalCdf(0.0) - ScaledLowerTail(epsilon, std::sqrt(2.0 * epsilon));

  AnalyticGaussianCalibration out{};
  out.upper_branch = delta >= delta_zero;
  double alpha;
  if (out.upper_branch) {
    auto b_plus = [epsilon](double v) {
      return NormalCdf(std::sqrt(epsilon * v)) -
             ScaledLowerTail(epsilon, std::sqrt(epsilon * (v + 2.0)));
    };
    const Root root = SolveMonotone(b_plus, delta, /*increasing=*/true);
    out.root = root.value;
    out.residual = root.residual;
    alpha = std::sqrt(1.0 + root.value / 2.0) - std::sqrt(root.value / 2.0);
  } else {
    auto b_minus = [epsilon](double u) {
      return NormalCdf(-std::sqrt(epsilon * u)) -
             ScaledLowerTail(epsilon, std::sqrt(epsilon * (u + 2.0)));
    };
    const Root root = SolveMonotone(b_minus, delta, /*increasing=*/false);
    out.root = root.value;
    out.residual = root.residual;
    alpha = std::sqrt(1.0 + root.value / 2.0) + std::sqrt(root.value / 2.0);
  }
  out.sigma = alpha * sensitivity / std::sqrt(2.0 * epsilon);
  return out;
}

double AnalyticGaussianSigma(const PrivacyParams& params, double sensitivity) {
  return CalibrateAnalyticGaussian(params, sensitivity).sigma;
}

double GaussianRandomise(double value, double sigma, RandomSource& rng) {
  if (!(sigma > 0)) throw ParameterError("sigma must be positive");
  return value + sigma * rng.StandardNormal();
}

Gaussian::Gaussian(const PrivacyParams& params, double sensitivity,
                   bool analytic)
    : sigma_(analytic ? AnalyticGaussianSigma(params, sensitivity)
                      : GaussianSigma(params, sensitivity)) {}

}  // namespace dpcore
