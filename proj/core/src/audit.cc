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

#include "dpcore/audit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "dpcore/errors.h"

namespace dpcore::audit {

OutputPartition::OutputPartition(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw PartitionError("a partition needs at least one edge");
  if (edges_.size() + 1 > kMaxCells) {
    throw PartitionError("a partition may have at most " + std::to_string(kMaxCells) +
                         " cells");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!std::isfinite(edges_[i])) throw PartitionError("partition edges must be finite");
    if (i > 0 && !(edges_[i] > edges_[i - 1])) {
      throw PartitionError("partition edges must be strictly increasing");
    }
  }
}

OutputPartition OutputPartition::Uniform(double lo, double hi, std::size_t cells) {
  if (cells < 1 || !(hi > lo)) throw PartitionError("invalid uniform partition");
  std::vector<double> edges(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
  }
  edges.back() = hi;
  return OutputPartition(std::move(edges));
}

OutputPartition OutputPartition::Integers(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PartitionError("invalid integer partition");
  std::vector<double> edges;
  for (std::int64_t k = lo; k <= hi + 1; ++k) edges.push_back(static_cast<double>(k) - 0.5);
  return OutputPartition(std::move(edges));
}

std::size_t OutputPartition::CellOf(double output) const {
  if (std::isnan(output)) throw PartitionError("mechanism produced NaN");
  return static_cast<std::size_t>(
      std::upper_bound(edges_.begin(), edges_.end(), output) - edges_.begin());
}

std::string OutputPartition::Describe() const {
  std::ostringstream out;
  out.precision(17);
  out << size() << " cells: (-inf, " << edges_.front() << ") ";
  if (edges_.size() > 1) {
    out << "+ " << edges_.size() - 1 << " cells on [" << edges_.front() << ", "
        << edges_.back() << ") ";
  }
  out << "+ [" << edges_.back() << ", +inf)";
  return out.str();
}

AuditReport EstimatePrivacyLoss(const Sampler& sampler, double x, double x_prime,
                                const OutputPartition& partition,
                                const PrivacyParams& params, std::size_t n_samples,
                                RandomSource& rng) {
  if (n_samples < kMinSamples) {
    throw ParameterError("an audit needs at least " + std::to_string(kMinSamples) +
                         " samples per input");
  }
  AuditReport report;
  report.partition = partition.Describe();
  report.x = x;
  report.x_prime = x_prime;
  report.epsilon = params.epsilon();
  report.delta = params.delta();
  report.n_samples = n_samples;

  const auto estimate = [&](double input) {
    std::vector<std::size_t> counts(partition.size(), 0);
    for (std::size_t i = 0; i < n_samples; ++i) ++counts[partition.CellOf(sampler(input, rng))];
    std::vector<double> freq(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
      freq[c] = static_cast<double>(counts[c]) / static_cast<double>(n_samples);
    }
    return freq;
  };
  report.frequencies_x = estimate(x);
  report.frequencies_x_prime = estimate(x_prime);

  const double n = static_cast<double>(n_samples);
  const double growth = std::exp(params.epsilon());
  const auto slack = [n](double p) { return kSlackSigmas * std::sqrt(p * (1.0 - p) / n); };

  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const double pairs[2][2] = {{report.frequencies_x[c], report.frequencies_x_prime[c]},
                                {report.frequencies_x_prime[c], report.frequencies_x[c]}};
    for (const auto& pair : pairs) {
      const double a = pair[0];
      const double b = pair[1];
      if (a - slack(a) > growth * (b + slack(b)) + params.delta()) ++report.violations;
      const double excess = a - params.delta();
      if (excess > 0) {
        worst = std::max(worst, b > 0 ? std::log(excess / b)
                                      : std::numeric_limits<double>::infinity());
      }
    }
  }
  report.worst_log_ratio = std::isfinite(worst) || worst > 0 ? worst : 0.0;
  report.passed = report.violations == 0;
  return report;
}

std::string AuditReportToJson(const AuditReport& report) {
  nlohmann::json out;
  out["partition"] = report.partition;
  out["x"] = report.x;
  out["x_prime"] = report.x_prime;
  out["epsilon"] = report.epsilon;
  out["delta"] = report.delta;
  out["n_samples"] = report.n_samples;
  out["frequencies_x"] = report.frequencies_x;
  out["frequencies_x_prime"] = report.frequencies_x_prime;
  out["worst_log_ratio"] = std::isfinite(report.worst_log_ratio)
                               ? nlohmann::json(report.worst_log_ratio)
                               : nlohmann::json(nullptr);
  out["violations"] = report.violations;
  out["passed"] = report.passed;
  return out.dump(2) + "\n";
}

}  // namespace dpcore::audit
