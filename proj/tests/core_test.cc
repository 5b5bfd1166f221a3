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

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dpcore/bounds.h"
#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/errors.h"
#include "dpcore/privacy_params.h"
#include "dpcore/random.h"
#include "test_util.h"

namespace dpcore {
namespace {

using testing::ChiSquarePValue;
using testing::UlpDistance;

// ---------------------------------------------------------------- params

TEST(PrivacyParams, AcceptsCanonicalPair) {
  const PrivacyParams p(1.0, 0.0);
  EXPECT_EQ(p.epsilon(), 1.0);
  EXPECT_EQ(p.delta(), 0.0);
  EXPECT_NO_THROW(ValidatePrivacyParams(p, {rules::EpsilonPositive()}, "test"));
}

TEST(PrivacyParams, RejectsBothZero) {
  EXPECT_THROW(PrivacyParams(0.0, 0.0), ParameterError);
}

TEST(PrivacyParams, RejectsOutOfRange) {
  EXPECT_THROW(PrivacyParams(-0.1, 0.0), ParameterError);
  EXPECT_THROW(PrivacyParams(1.0, -1e-9), ParameterError);
  EXPECT_THROW(PrivacyParams(1.0, 1.5), ParameterError);
  EXPECT_THROW(PrivacyParams(std::nan(""), 0.0), ParameterError);
  EXPECT_NO_THROW(PrivacyParams(0.0, 0.5));
}

TEST(PrivacyParams, EpsilonCeilingRuleNamesRuleAndMechanism) {
  const PrivacyParams p(1.5, 1e-5);
  try {
    ValidatePrivacyParams(p, {rules::EpsilonAtMost(1.0)}, "classical Gaussian");
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("epsilon must not exceed 1"), std::string::npos) << message;
    EXPECT_NE(message.find("classical Gaussian"), std::string::npos) << message;
  }
}

TEST(PrivacyParams, DeltaIntervalRule) {
  const auto rule = rules::DeltaInOpenInterval(0.0, 0.5);
  EXPECT_TRUE(rule.holds(PrivacyParams(1.0, 0.25)));
  EXPECT_FALSE(rule.holds(PrivacyParams(1.0, 0.5)));
  EXPECT_FALSE(rule.holds(PrivacyParams(1.0, 0.0)));
}

// ---------------------------------------------------------------- bounds

TEST(Bounds, RejectsInvertedOrInfinite) {
  EXPECT_THROW(Bounds(1.0, 0.0), ParameterError);
  EXPECT_THROW(Bounds(0.0, std::numeric_limits<double>::infinity()), ParameterError);
  EXPECT_NO_THROW(Bounds(2.0, 2.0));
}

TEST(Truncate, Examples) {
  EXPECT_EQ(Truncate(5.2, Bounds(0, 1)), 1.0);
  EXPECT_EQ(Truncate(0.3, Bounds(0, 1)), 0.3);
  EXPECT_EQ(Truncate(-7, Bounds(-1, 4)), -1.0);
}

TEST(Fold, Examples) {
  EXPECT_DOUBLE_EQ(Fold(1.2, Bounds(0, 1)), 0.8);
  EXPECT_EQ(Fold(0.5, Bounds(0, 1)), 0.5);
  // 2.3 -> -0.3 -> 0.3 by hand.
  EXPECT_NEAR(Fold(2.3, Bounds(0, 1)), 0.3, 1e-12);
}

TEST(Fold, BoundaryIsFixedPoint) {
  EXPECT_EQ(Fold(0.0, Bounds(0, 1)), 0.0);
  EXPECT_EQ(Fold(1.0, Bounds(0, 1)), 1.0);
}

TEST(Fold, ReflectionOracleOnManyValues) {
  // Independent oracle: iterate the reflection rule literally.
  const Bounds b(-1.5, 2.0);
  RandomSource rng(11);
  for (int i = 0; i < 10000; ++i) {
    double v = -30 + 60 * rng.Uniform();
    const double folded = Fold(v, b);
    while (v < b.lower() || v > b.upper()) v = v < b.lower() ? 2 * b.lower() - v : 2 * b.upper() - v;
    EXPECT_NEAR(folded, v, 1e-9);
  }
}

TEST(Fold, FarValuesTerminateInside) {
  const Bounds b(0, 1);
  for (double v : {1e15, -1e15, 1e300, -1e300, 12345.678}) {
    const double f = Fold(v, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
  EXPECT_THROW(Fold(std::numeric_limits<double>::infinity(), b), ParameterError);
  EXPECT_THROW(Fold(3.0, Bounds(1, 1)), ParameterError);
}

TEST(PostProcessing, Idempotent) {
  const Bounds b(-2, 3);
  RandomSource rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = -50 + 100 * rng.Uniform();
    EXPECT_EQ(Truncate(Truncate(v, b), b), Truncate(v, b));
    EXPECT_EQ(Fold(Fold(v, b), b), Fold(v, b));
  }
}

TEST(Fold, PreservesUniformMeasure) {
  const double l = 2.0;
  const double u = 5.0;
  const double w = u - l;
  const Bounds b(l, u);
  RandomSource rng(5);
  constexpr int kBins = 30;
  constexpr int kDraws = 1000000;
  std::vector<double> observed(kBins, 0.0);
  for (int i = 0; i < kDraws; ++i) {
    const double v = (l - 3 * w) + 7 * w * rng.Uniform();
    const double f = Fold(v, b);
    const int bin = std::min(kBins - 1, static_cast<int>((f - l) / w * kBins));
    observed[static_cast<std::size_t>(bin)] += 1;
  }
  const std::vector<double> expected(kBins, static_cast<double>(kDraws) / kBins);
  EXPECT_GT(ChiSquarePValue(observed, expected), 0.001);
}

// ---------------------------------------------------------------- budget

TEST(SplitBudget, Examples) {
  EXPECT_EQ(SplitBudget(1.0, 2), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(SplitBudget(1.0, 1), (std::vector<double>{1.0}));
  const auto thirds = SplitBudget(0.9, 3);
  ASSERT_EQ(thirds.size(), 3u);
  for (double s : thirds) EXPECT_NEAR(s, 0.3, 1e-15);
  EXPECT_LE(UlpDistance(thirds[0] + thirds[1] + thirds[2], 0.9), 1);
}

TEST(SplitBudget, SumsWithinFourUlps) {
  RandomSource rng(17);
  for (std::size_t shares : {1u, 2u, 3u, 7u, 9u, 10u, 99u, 1000u, 10000u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const double epsilon = std::exp(-5 + 10 * rng.Uniform());
      const auto parts = SplitBudget(epsilon, shares);
      ASSERT_EQ(parts.size(), shares);
      double sum = 0;
      for (double p : parts) sum += p;
      EXPECT_LE(UlpDistance(sum, epsilon), 4) << shares << " " << epsilon;
      for (double p : parts) EXPECT_GT(p, 0.0);
    }
  }
  EXPECT_THROW(SplitBudget(1.0, 0), ParameterError);
}

TEST(BudgetLedger, SequentialAndParallelComposition) {
  BudgetLedger ledger;
  ledger.Record("s1", "a", "m", 0.25);
  ledger.Record("s1", "a", "m", 0.25);
  ledger.Record("s1", "b", "m", 0.3);
  ledger.Record("s2", "all", "m", 0.5);
  EXPECT_EQ(ledger.Stages(), (std::vector<std::string>{"s1", "s2"}));
  EXPECT_EQ(ledger.PartitionEpsilon("s1", "a"), 0.5);
  EXPECT_DOUBLE_EQ(ledger.WorstCaseEpsilon(), 1.0);
  RecordSpend(nullptr, "x", "y", "z", 1.0);  // no-op
}

// ----------------------------------------------------------- diagnostics

TEST(Diagnostics, EmitAppendsAndNeverThrows) {
  Diagnostics sink;
  EXPECT_TRUE(sink.empty());
  sink.EmitPrivacyLeak("Bounds have not been specified");
  EXPECT_EQ(sink.size(), 1u);
  sink.EmitCompatibility("parameter ignored", {{"parameter", "copy"}});
  EXPECT_EQ(sink.size(), 2u);
  EXPECT_EQ(sink.Count(DiagnosticKind::kPrivacyLeak), 1u);
  EXPECT_EQ(sink.Count(DiagnosticKind::kCompatibility), 1u);
}

TEST(Diagnostics, FormatPrefixes) {
  Diagnostics sink;
  sink.EmitPrivacyLeak("Bounds have not been specified", {{"bounds", "[0, 1]"}});
  sink.EmitCompatibility("parameter ignored");
  EXPECT_EQ(FormatDiagnostic(sink.records()[0]),
            "WARN[PrivacyLeak] Bounds have not been specified (bounds=[0, 1])");
  EXPECT_EQ(FormatDiagnostic(sink.records()[1]), "WARN[Compat] parameter ignored");
}

// ---------------------------------------------------------------- random

TEST(RandomSource, SameSeedSameStream) {
  RandomSource a(123);
  RandomSource b(123);
  for (int i = 0; i < 100000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64());
  RandomSource c(124);
  RandomSource d(123);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) equal += c.NextU64() == d.NextU64() ? 1 : 0;
  EXPECT_LT(equal, 2);
}

TEST(RandomSource, MatchesStandardEngine) {
  // The stream is mt19937_64, whose sequence the C++ standard fixes: the
  // 10000th output for the default seed is 9981545732273789042.
  std::mt19937_64 reference(5489u);
  RandomSource source(5489u);
  std::uint64_t last = 0;
  for (int i = 0; i < 10000; ++i) {
    last = source.NextU64();
    ASSERT_EQ(last, reference());
  }
  EXPECT_EQ(last, 9981545732273789042ULL);
}

TEST(RandomSource, UniformRangesAndResolution) {
  RandomSource rng(9);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u * 9007199254740992.0, std::floor(u * 9007199254740992.0));
    const double v = rng.UniformOpen();
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}

TEST(RandomSource, UniformIndexIsUniform) {
  RandomSource rng(21);
  constexpr int kN = 7;
  std::vector<double> observed(kN, 0.0);
  for (int i = 0; i < 700000; ++i) observed[rng.UniformIndex(kN)] += 1;
  EXPECT_GT(ChiSquarePValue(observed, std::vector<double>(kN, 100000.0)), 0.001);
  EXPECT_THROW(rng.UniformIndex(0), ParameterError);
}

TEST(RandomSource, NormalAndExponentialMoments) {
  RandomSource rng(33);
  constexpr int kDraws = 1000000;
  std::vector<double> z(kDraws);
  std::vector<double> e(kDraws);
  for (int i = 0; i < kDraws; ++i) {
    z[i] = rng.StandardNormal();
    e[i] = rng.StandardExponential();
  }
  EXPECT_NEAR(testing::Mean(z), 0.0, 5e-3);
  EXPECT_NEAR(testing::Variance(z), 1.0, 5 * std::sqrt(2.0 / kDraws));
  EXPECT_NEAR(testing::Mean(e), 1.0, 5e-3);
  EXPECT_LT(testing::KsStatistic(z, [](double x) { return testing::NormCdf(x, 0, 1); }),
            0.002);
}

TEST(DeriveSeed, SplitMixOracle) {
  // splitmix64 reference output for state 0 (first draw).
  EXPECT_EQ(Mix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(DeriveSeed(42, 0, 1), DeriveSeed(42, 1, 0));
  EXPECT_EQ(DeriveSeed(42, 3, 4), DeriveSeed(42, 3, 4));
}

}  // namespace
}  // namespace dpcore
