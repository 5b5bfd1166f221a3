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
#include <vector>

#include <gtest/gtest.h>

#include "dpcore/errors.h"
#include "dpcore/histogram.h"

namespace dpcore::tools {
namespace {

std::vector<double> Sample(std::size_t n, std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<double> out(n);
  for (double& x : out) x = 10 * rng.Uniform();
  return out;
}

// Counts by direct comparison against every bin interval.
std::vector<double> NaiveCounts(const std::vector<double>& values,
                                const std::vector<double>& edges) {
  std::vector<double> counts(edges.size() - 1, 0);
  for (double v : values) {
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
      const bool last = b + 2 == edges.size();
      if (v >= edges[b] && (v < edges[b + 1] || (last && v == edges[b + 1]))) {
        counts[b] += 1;
        break;
      }
    }
  }
  return counts;
}

TEST(Histogram, HugeEpsilonIsExact) {
  const auto values = Sample(1000, 1);
  const AxisSpec axis{{}, 7, Bounds(0, 10)};
  Diagnostics diagnostics;
  RandomSource rng(2);
  const auto result = DpHistogram(values, axis, false, 1e6, rng, diagnostics);
  EXPECT_TRUE(diagnostics.empty());
  ASSERT_EQ(result.edges.size(), 1u);
  EXPECT_EQ(result.values, NaiveCounts(values, result.edges[0]));
  EXPECT_DOUBLE_EQ(result.edges[0].front(), 0);
  EXPECT_DOUBLE_EQ(result.edges[0].back(), 10);
}

TEST(Histogram, EachRowInExactlyOneBin) {
  const auto values = Sample(500, 3);
  const std::vector<double> edges = {0, 1, 2.5, 4, 9, 10};
  const Matrix data(values.size(), 1, values);
  const auto counts = ExactHistogramCounts(data, {edges});
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  EXPECT_EQ(total, values.size());
  const auto naive = NaiveCounts(values, edges);
  for (std::size_t b = 0; b < counts.size(); ++b) EXPECT_EQ(counts[b], naive[b]);
}

TEST(Histogram, EmptyDataStaysNonNegative) {
  Diagnostics diagnostics;
  RandomSource rng(4);
  const auto result =
      DpHistogram(std::vector<double>{}, AxisSpec{{}, 20, Bounds(0, 1)}, false, 0.1, rng,
                  diagnostics);
  ASSERT_EQ(result.values.size(), 20u);
  for (double v : result.values) {
    EXPECT_GE(v, 0);
    EXPECT_EQ(v, std::floor(v));
  }
}

TEST(Histogram, MissingRangeLeaksOnce) {
  const auto values = Sample(100, 5);
  Diagnostics diagnostics;
  RandomSource rng(6);
  const auto result = DpHistogram(values, AxisSpec{{}, 5, std::nullopt}, false, 1, rng,
                                  diagnostics);
  EXPECT_EQ(diagnostics.Count(DiagnosticKind::kPrivacyLeak), 1u);
  EXPECT_EQ(diagnostics.size(), 1u);
  EXPECT_EQ(result.values.size(), 5u);

  diagnostics.Clear();
  const auto two = DpHistogram2d(values, values, AxisSpec{{}, 3, std::nullopt},
                                 AxisSpec{{}, 3, Bounds(0, 10)}, false, 1, rng, diagnostics);
  EXPECT_EQ(diagnostics.Count(DiagnosticKind::kPrivacyLeak), 1u);
  EXPECT_EQ(two.values.size(), 9u);
}

TEST(Histogram, TwoDimensional) {
  const auto x = Sample(300, 7);
  const auto y = Sample(300, 8);
  const std::vector<double> ex = {0, 5, 10};
  const std::vector<double> ey = {0, 2, 6, 10};
  Diagnostics diagnostics;
  RandomSource rng(9);
  const auto result = DpHistogram2d(x, y, AxisSpec{ex, 0, std::nullopt},
                                    AxisSpec{ey, 0, std::nullopt}, false, 1e6, rng,
                                    diagnostics);
  EXPECT_EQ(result.shape, (std::vector<std::size_t>{2, 3}));
  std::vector<double> expected(6, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t bx = x[i] < 5 ? 0 : 1;
    const std::size_t by = y[i] < 2 ? 0 : (y[i] < 6 ? 1 : 2);
    expected[bx * 3 + by] += 1;
  }
  EXPECT_EQ(result.values, expected);
}

TEST(Histogram, Density) {
  const std::vector<double> values = {0.1, 0.2, 0.3, 1.5};
  Diagnostics diagnostics;
  RandomSource rng(10);
  const auto result = DpHistogram(values, AxisSpec{{0, 1, 3}, 0, std::nullopt}, true, 1e6,
                                  rng, diagnostics);
  EXPECT_DOUBLE_EQ(result.values[0], 3.0 / (4 * 1));
  EXPECT_DOUBLE_EQ(result.values[1], 1.0 / (4 * 2));
}

TEST(Histogram, LedgerUsesFullEpsilonPerBin) {
  const auto values = Sample(50, 11);
  Diagnostics diagnostics;
  RandomSource rng(12);
  BudgetLedger ledger;
  DpHistogram(values, AxisSpec{{}, 4, Bounds(0, 10)}, false, 0.7, rng, diagnostics, &ledger);
  EXPECT_EQ(ledger.size(), 4u);
  EXPECT_DOUBLE_EQ(ledger.WorstCaseEpsilon(), 0.7);
}

TEST(Histogram, SpecErrors) {
  Diagnostics diagnostics;
  RandomSource rng(13);
  const std::vector<double> values = {1, 2};
  EXPECT_THROW(DpHistogram(values, AxisSpec{{0, 2, 1}, 0, std::nullopt}, false, 1, rng,
                           diagnostics),
               SpecError);
  EXPECT_THROW(DpHistogram(values, AxisSpec{{0, 0}, 0, std::nullopt}, false, 1, rng,
                           diagnostics),
               SpecError);
  EXPECT_THROW(DpHistogram(values, AxisSpec{{}, 0, Bounds(0, 1)}, false, 1, rng, diagnostics),
               SpecError);
}

}  // namespace
}  // namespace dpcore::tools
