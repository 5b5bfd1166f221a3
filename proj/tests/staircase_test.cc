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
#include <vector>

#include <gtest/gtest.h>

#include "dpcore/errors.h"
#include "dpcore/staircase.h"
#include "test_util.h"

namespace dpcore {
namespace {

using testing::ChiSquarePValue;

NumericMechanismConfig Config(double epsilon, double sensitivity,
                              std::optional<double> gamma = std::nullopt) {
  return {PrivacyParams(epsilon), sensitivity, std::nullopt, gamma};
}

TEST(Staircase, DefaultGamma) {
  EXPECT_DOUBLE_EQ(StaircaseDefaultGamma(0), 0.5);
  EXPECT_NEAR(StaircaseDefaultGamma(2), 1 / (1 + std::exp(1.0)), 1e-15);
  EXPECT_DOUBLE_EQ(Staircase(Config(2, 1)).gamma(), StaircaseDefaultGamma(2));
  EXPECT_DOUBLE_EQ(Staircase(Config(2, 1, 0.3)).gamma(), 0.3);
}

TEST(Staircase, Preconditions) {
  EXPECT_THROW(Staircase({PrivacyParams(1, 0.1), 1, std::nullopt, std::nullopt}),
               ParameterError);
  EXPECT_THROW(Staircase(Config(1, 1, 1.5)), ParameterError);
  EXPECT_THROW(Staircase(Config(1, 0)), ParameterError);
}

// Staircase density: a e^{-k eps} on [k D, (k + g) D) and a e^{-(k+1) eps}
// on [(k + g) D, (k + 1) D), mirrored, with a chosen so the total is one.
TEST(Staircase, MatchesPiecewiseDensity) {
  const double epsilon = 1.0;
  const double sensitivity = 2.0;
  const double gamma = StaircaseDefaultGamma(epsilon);
  const double rho = std::exp(-epsilon);
  const double a = (1 - rho) / (2 * sensitivity * (gamma + (1 - gamma) * rho));

  constexpr int kSteps = 6;
  constexpr int kSub = 8;
  // Cells: for each side, each step k < kSteps, each piece split into kSub
  // equal subcells; then one tail cell per side.
  std::vector<double> observed(2 * (2 * kSteps * kSub + 1), 0.0);
  std::vector<double> expected(observed.size(), 0.0);
  constexpr int kDraws = 1000000;

  auto cell_of = [&](double noise) -> std::size_t {
    const std::size_t side = noise < 0 ? 1 : 0;
    const double t = std::abs(noise) / sensitivity;
    const std::size_t base = side * (2 * kSteps * kSub + 1);
    const double k = std::floor(t);
    if (k >= kSteps) return base + 2 * kSteps * kSub;
    const double frac = t - k;
    std::size_t piece;
    double within;
    if (frac < gamma) {
      piece = 0;
      within = frac / gamma;
    } else {
      piece = 1;
      within = (frac - gamma) / (1 - gamma);
    }
    const auto sub = std::min<std::size_t>(kSub - 1, static_cast<std::size_t>(within * kSub));
    return base + (static_cast<std::size_t>(k) * 2 + piece) * kSub + sub;
  };

  for (std::size_t side = 0; side < 2; ++side) {
    const std::size_t base = side * (2 * kSteps * kSub + 1);
    double covered = 0;
    for (int k = 0; k < kSteps; ++k) {
      const double inner = a * std::pow(rho, k) * gamma * sensitivity;
      const double outer = a * std::pow(rho, k + 1) * (1 - gamma) * sensitivity;
      for (int s = 0; s < kSub; ++s) {
        expected[base + (2 * k) * kSub + s] = kDraws * inner / kSub;
        expected[base + (2 * k + 1) * kSub + s] = kDraws * outer / kSub;
      }
      covered += inner + outer;
    }
    expected[base + 2 * kSteps * kSub] = kDraws * (0.5 - covered);
  }

  const Staircase mechanism(Config(epsilon, sensitivity));
  RandomSource rng(31);
  for (int i = 0; i < kDraws; ++i) observed[cell_of(mechanism.Randomise(0, rng))] += 1;

  EXPECT_GT(ChiSquarePValue(observed, expected), 0.001);

  // Flatness within each piece on its own.
  for (std::size_t side = 0; side < 2; ++side) {
    for (std::size_t piece = 0; piece < 2 * kSteps; ++piece) {
      const std::size_t first = side * (2 * kSteps * kSub + 1) + piece * kSub;
      double total = 0;
      for (int s = 0; s < kSub; ++s) total += observed[first + s];
      if (total < 200) continue;
      std::vector<double> obs(observed.begin() + first, observed.begin() + first + kSub);
      std::vector<double> exp(kSub, total / kSub);
      EXPECT_GT(ChiSquarePValue(obs, exp), 0.001) << side << " " << piece;
    }
  }
}

TEST(Staircase, LargeEpsilonConcentrates) {
  const Staircase mechanism(Config(20, 1));
  RandomSource rng(32);
  int inside = 0;
  constexpr int kDraws = 1000000;
  for (int i = 0; i < kDraws; ++i) {
    inside += std::abs(mechanism.Randomise(0, rng)) <= 1 ? 1 : 0;
  }
  EXPECT_GT(inside, 0.999 * kDraws);
}

TEST(Staircase, TranslationInvariance) {
  const Staircase mechanism(Config(0.8, 1.5));
  RandomSource a(33);
  RandomSource b(33);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_NEAR(mechanism.Randomise(4, a) - 4, mechanism.Randomise(-2, b) + 2, 1e-12);
  }
}

}  // namespace
}  // namespace dpcore
