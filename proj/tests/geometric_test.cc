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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include <gtest/gtest.h>

#include "dpcore/errors.h"
#include "dpcore/geometric.h"

namespace dpcore {
namespace {

// P(Z = k) for the two-sided geometric law at ratio rho.
double Pmf(std::int64_t k, double rho) {
  return (1 - rho) / (1 + rho) * std::pow(rho, std::abs(static_cast<double>(k)));
}

// Reflect into [l, u] on the real line, then move a half-integer inward.
double FoldOracle(double v, double l, double u) {
  while (v < l || v > u) v = v < l ? 2 * l - v : 2 * u - v;
  if (v != std::floor(v)) v += v == l ? 0.5 : -0.5;
  return v;
}

double TotalVariation(const std::map<std::int64_t, double>& empirical,
                      const std::map<std::int64_t, double>& exact) {
  std::map<std::int64_t, double> diff = exact;
  for (const auto& [k, p] : empirical) diff[k] -= p;
  double tv = 0;
  for (const auto& [k, d] : diff) tv += std::abs(d);
  return tv / 2;
}

TEST(GeometricPmf, ClosedForm) {
  const double rho = std::exp(-0.5);
  for (std::int64_t k = -10; k <= 10; ++k) {
    EXPECT_NEAR(TwoSidedGeometricPmf(k, 1.0, 2), Pmf(k, rho), 1e-15);
  }
  double total = 0;
  for (std::int64_t k = -2000; k <= 2000; ++k) total += TwoSidedGeometricPmf(k, 1.0, 2);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(GeometricPmf, ExactRatioBound) {
  for (double epsilon : {0.5, 1.0, 2.0}) {
    for (std::int64_t sensitivity : {1, 3}) {
      for (std::int64_t k = -200; k <= 200; ++k) {
        const double ratio = TwoSidedGeometricPmf(k, epsilon, sensitivity) /
                             TwoSidedGeometricPmf(k - sensitivity, epsilon, sensitivity);
        EXPECT_LE(ratio, std::exp(epsilon) * (1 + 1e-12));
      }
    }
  }
}

TEST(Geometric, MatchesPmf) {
  const Geometric mechanism({PrivacyParams(1.0), 1, std::nullopt}, PostProcess::kNone);
  RandomSource rng(41);
  constexpr int kDraws = 1000000;
  std::map<std::int64_t, double> empirical;
  for (int i = 0; i < kDraws; ++i) empirical[mechanism.Randomise(std::int64_t{5}, rng) - 5] += 1.0 / kDraws;
  std::map<std::int64_t, double> exact;
  for (std::int64_t k = -60; k <= 60; ++k) exact[k] = Pmf(k, std::exp(-1.0));
  EXPECT_LT(TotalVariation(empirical, exact), 0.003);
}

TEST(Geometric, SensitivityScalesDecay) {
  const Geometric mechanism({PrivacyParams(1.0), 4, std::nullopt}, PostProcess::kNone);
  EXPECT_NEAR(mechanism.decay(), std::exp(-0.25), 1e-15);
}

TEST(Geometric, Truncated) {
  RandomSource rng(42);
  const Geometric zero({PrivacyParams(0.1), 1, Bounds(0, 0)}, PostProcess::kTruncate);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(zero.Randomise(std::int64_t{0}, rng), 0);

  const Geometric clamp({PrivacyParams(0.5), 1, Bounds(-2, 3)}, PostProcess::kTruncate);
  constexpr int kDraws = 200000;
  std::map<std::int64_t, double> empirical;
  for (int i = 0; i < kDraws; ++i) empirical[clamp.Randomise(std::int64_t{1}, rng)] += 1.0 / kDraws;
  const double rho = std::exp(-0.5);
  std::map<std::int64_t, double> exact;
  for (std::int64_t k = -400; k <= 400; ++k) {
    exact[std::clamp<std::int64_t>(1 + k, -2, 3)] += Pmf(k, rho);
  }
  EXPECT_LT(TotalVariation(empirical, exact), 0.005);
  EXPECT_THROW(Geometric({PrivacyParams(1), 1, Bounds(0, 2.5)}, PostProcess::kTruncate),
               ParameterError);
}

TEST(Geometric, FoldedHalfIntegerBounds) {
  struct Case {
    double lower, upper;
    std::int64_t input;
  };
  RandomSource rng(43);
  for (const Case& c : {Case{-0.5, 2.5, 0}, Case{0, 3, 3}, Case{0, 2.5, 1}, Case{0.5, 4, 2}}) {
    const Geometric mechanism({PrivacyParams(0.7), 1, Bounds(c.lower, c.upper)},
                              PostProcess::kFold);
    const double rho = std::exp(-0.7);
    std::map<std::int64_t, double> exact;
    for (std::int64_t k = -400; k <= 400; ++k) {
      exact[static_cast<std::int64_t>(FoldOracle(static_cast<double>(c.input + k), c.lower, c.upper))] +=
          Pmf(k, rho);
    }
    constexpr int kDraws = 200000;
    std::map<std::int64_t, double> empirical;
    for (int i = 0; i < kDraws; ++i) {
      const std::int64_t v = mechanism.Randomise(c.input, rng);
      ASSERT_GE(static_cast<double>(v), c.lower);
      ASSERT_LE(static_cast<double>(v), c.upper);
      empirical[v] += 1.0 / kDraws;
    }
    EXPECT_LT(TotalVariation(empirical, exact), 0.005) << c.lower << " " << c.upper;
  }
}

TEST(Geometric, Preconditions) {
  EXPECT_THROW(Geometric({PrivacyParams(1, 0.1), 1, std::nullopt}, PostProcess::kNone),
               ParameterError);
  EXPECT_THROW(Geometric({PrivacyParams(1), 0, std::nullopt}, PostProcess::kNone),
               ParameterError);
  EXPECT_THROW(Geometric({PrivacyParams(1), 1, std::nullopt}, PostProcess::kFold),
               ParameterError);
  EXPECT_THROW(Geometric({PrivacyParams(1), 1, Bounds(0.25, 1)}, PostProcess::kFold),
               ParameterError);
  const Geometric mechanism({PrivacyParams(1), 1, std::nullopt}, PostProcess::kNone);
  RandomSource rng(44);
  EXPECT_THROW(mechanism.Randomise(1.5, rng), ParameterError);
  EXPECT_NO_THROW(mechanism.Randomise(2.0, rng));
}

}  // namespace
}  // namespace dpcore
