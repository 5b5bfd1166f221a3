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
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "dpcore/audit.h"
#include "dpcore/errors.h"
#include "dpcore/histogram.h"
#include "dpcore/laplace.h"
#include "dpcore/statistics.h"
#include "json.hpp"

namespace dpcore::audit {
namespace {

Sampler LaplaceSampler(double scale) {
  return [scale](double input, RandomSource& rng) {
    return input + SampleLaplace(scale, rng);
  };
}

TEST(OutputPartition, Cells) {
  const OutputPartition p({0, 1, 2});
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.CellOf(-5), 0u);
  EXPECT_EQ(p.CellOf(0), 1u);
  EXPECT_EQ(p.CellOf(1.5), 2u);
  EXPECT_EQ(p.CellOf(2), 3u);
  EXPECT_EQ(p.CellOf(std::numeric_limits<double>::infinity()), 3u);
  EXPECT_THROW(p.CellOf(std::nan("")), PartitionError);

  const auto ints = OutputPartition::Integers(-1, 1);
  EXPECT_EQ(ints.size(), 5u);
  EXPECT_EQ(ints.CellOf(-1), 1u);
  EXPECT_EQ(ints.CellOf(0), 2u);
  EXPECT_EQ(ints.CellOf(1), 3u);
  EXPECT_EQ(ints.CellOf(2), 4u);
  EXPECT_EQ(OutputPartition::Uniform(-8, 9, 100).size(), 102u);
}

TEST(OutputPartition, Limits) {
  EXPECT_NO_THROW(OutputPartition::Uniform(0, 1, 198));
  EXPECT_THROW(OutputPartition::Uniform(0, 1, 199), PartitionError);
  EXPECT_THROW(OutputPartition({}), PartitionError);
  EXPECT_THROW(OutputPartition({0, 0}), PartitionError);
  EXPECT_THROW(OutputPartition({0, std::numeric_limits<double>::infinity()}), PartitionError);
  EXPECT_THROW(OutputPartition::Integers(3, 2), PartitionError);
}

TEST(EstimatePrivacyLoss, CalibratedLaplacePasses) {
  RandomSource rng(1);
  const auto report = EstimatePrivacyLoss(LaplaceSampler(1.0), 0, 1,
                                          OutputPartition::Uniform(-8, 9, 100),
                                          PrivacyParams(1), 1000000, rng);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.violations, 0u);
  double total = 0;
  for (double f : report.frequencies_x) total += f;
  EXPECT_NEAR(total, 1, 1e-12);
  EXPECT_EQ(report.frequencies_x.size(), 102u);
  // Cells with real mass have log ratios near or below 1.
  double worst = 0;
  for (std::size_t i = 0; i < report.frequencies_x.size(); ++i) {
    const double a = report.frequencies_x[i];
    const double b = report.frequencies_x_prime[i];
    if (a > 1e-2 && b > 1e-2) worst = std::max(worst, std::abs(std::log(a / b)));
  }
  EXPECT_LT(worst, 1.05);
  EXPECT_GT(worst, 0.9);
}

TEST(EstimatePrivacyLoss, MisScaledLaplaceFails) {
  RandomSource rng(2);
  const auto report = EstimatePrivacyLoss(LaplaceSampler(0.5), 0, 1,
                                          OutputPartition::Uniform(-8, 9, 100),
                                          PrivacyParams(1), 1000000, rng);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.violations, 0u);
  EXPECT_GT(report.worst_log_ratio, 1.5);
}

TEST(EstimatePrivacyLoss, IdenticalInputsPass) {
  RandomSource rng(3);
  const auto report = EstimatePrivacyLoss(LaplaceSampler(0.01), 0.5, 0.5,
                                          OutputPartition::Uniform(-1, 2, 50),
                                          PrivacyParams(0.01), 100000, rng);
  EXPECT_TRUE(report.passed);
}

TEST(EstimatePrivacyLoss, DeterministicUnderSeed) {
  RandomSource a(4);
  RandomSource b(4);
  const auto partition = OutputPartition::Uniform(-5, 6, 40);
  const auto ra = EstimatePrivacyLoss(LaplaceSampler(1), 0, 1, partition, PrivacyParams(1),
                                      100000, a);
  const auto rb = EstimatePrivacyLoss(LaplaceSampler(1), 0, 1, partition, PrivacyParams(1),
                                      100000, b);
  EXPECT_EQ(ra.frequencies_x, rb.frequencies_x);
  EXPECT_EQ(ra.frequencies_x_prime, rb.frequencies_x_prime);
  EXPECT_EQ(AuditReportToJson(ra), AuditReportToJson(rb));
}

TEST(EstimatePrivacyLoss, Errors) {
  RandomSource rng(5);
  const auto nan_sampler = [](double, RandomSource&) { return std::nan(""); };
  EXPECT_THROW(EstimatePrivacyLoss(nan_sampler, 0, 1, OutputPartition({0}), PrivacyParams(1),
                                   100000, rng),
               PartitionError);
  EXPECT_THROW(EstimatePrivacyLoss(LaplaceSampler(1), 0, 1, OutputPartition({0}),
                                   PrivacyParams(1), 99999, rng),
               ParameterError);
}

TEST(EstimatePrivacyLoss, DisjointSupportsGiveInfiniteRatio) {
  RandomSource rng(8);
  const Sampler point = [](double input, RandomSource&) { return input; };
  const auto report = EstimatePrivacyLoss(point, 0, 1, OutputPartition({0.5}),
                                          PrivacyParams(1), 100000, rng);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.violations, 2u);
  EXPECT_TRUE(std::isinf(report.worst_log_ratio));
  const auto json = nlohmann::json::parse(AuditReportToJson(report));
  EXPECT_TRUE(json.at("worst_log_ratio").is_null());
  EXPECT_EQ(json.at("passed"), false);
}

TEST(EstimatePrivacyLoss, FalseFailureRate) {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomSource rng(1000 + seed);
    const auto report = EstimatePrivacyLoss(LaplaceSampler(1.0), 0, 1,
                                            OutputPartition::Uniform(-8, 9, 100),
                                            PrivacyParams(1), 100000, rng);
    failures += report.passed ? 0 : 1;
  }
  EXPECT_LE(failures, 1);
}

TEST(EstimatePrivacyLoss, MeanOnAdjacentDatasets) {
  RandomSource rng(6);
  const Sampler mean = [](double row, RandomSource& r) {
    Diagnostics diagnostics;
    const std::vector<double> data = {row};
    return tools::DpMean(data, {1.0, Bounds(0, 1)}, r, diagnostics);
  };
  const auto report = EstimatePrivacyLoss(mean, 0, 1, OutputPartition::Uniform(-8, 9, 100),
                                          PrivacyParams(1), 1000000, rng);
  EXPECT_TRUE(report.passed);
}

TEST(EstimatePrivacyLoss, HistogramBinOnAdjacentDatasets) {
  RandomSource rng(7);
  // Datasets {0.2, 0.6, row}: the last row lands in bin 0 or bin 1.
  const Sampler bin_zero = [](double row, RandomSource& r) {
    Diagnostics diagnostics;
    const std::vector<double> data = {0.2, 0.6, row};
    const auto result = tools::DpHistogram(data, tools::AxisSpec{{0, 0.5, 1}, 0, std::nullopt},
                                           false, 1.0, r, diagnostics);
    return result.values[0];
  };
  const auto report = EstimatePrivacyLoss(bin_zero, 0.1, 0.9, OutputPartition::Integers(0, 12),
                                          PrivacyParams(1), 1000000, rng);
  EXPECT_TRUE(report.passed);
}

}  // namespace
}  // namespace dpcore::audit
