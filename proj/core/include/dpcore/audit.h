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

#ifndef DPCORE_AUDIT_H_
#define DPCORE_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore::audit {

inline constexpr std::size_t kMaxCells = 200;
inline constexpr std::size_t kMinSamples = 100000;
// Binomial standard errors of slack granted to each estimate.
inline constexpr double kSlackSigmas = 4.0;

// A partition of the real line given by strictly increasing finite edges
// e_0 < ... < e_m. Cells are (-inf, e_0), [e_0, e_1), ..., [e_m, +inf), so
// the two overflow cells are always present and every non-NaN output lands
// in exactly one cell.
class OutputPartition {
 public:
  explicit OutputPartition(std::vector<double> edges);

  // `cells` equal-width cells on [lo, hi) plus the two overflow cells.
  static OutputPartition Uniform(double lo, double hi, std::size_t cells);
  // One cell per integer in [lo, hi] plus the two overflow cells.
  static OutputPartition Integers(std::int64_t lo, std::int64_t hi);

  std::size_t size() const { return edges_.size() + 1; }
  const std::vector<double>& edges() const { return edges_; }
  // Throws PartitionError for NaN.
  std::size_t CellOf(double output) const;
  std::string Describe() const;

 private:
  std::vector<double> edges_;
};

// A mechanism closed over everything except its input.
using Sampler = std::function<double(double input, RandomSource& rng)>;

struct AuditReport {
  std::string partition;
  double x = 0;
  double x_prime = 0;
  double epsilon = 0;
  double delta = 0;
  std::size_t n_samples = 0;
  std::vector<double> frequencies_x;
  std::vector<double> frequencies_x_prime;
  // max over cells and both directions of log((P[S|a] - delta) / P[S|b]),
  // taken over cells where both are positive; +inf if some cell has mass
  // beyond delta under one input and none under the other.
  double worst_log_ratio = 0;
  std::size_t violations = 0;
  bool passed = false;
};

// Draws n_samples outputs for x and then for x_prime and checks, for every
// cell S and both directions,
//
//   P[S|a] - slack_a <= e^eps (P[S|b] + slack_b) + delta,
//
// where slack = 4 sqrt(P (1 - P) / n) for the respective estimate.
AuditReport EstimatePrivacyLoss(const Sampler& sampler, double x, double x_prime,
                                const OutputPartition& partition,
                                const PrivacyParams& params, std::size_t n_samples,
                                RandomSource& rng);

// The report as a JSON document; an infinite log-ratio is written as null.
std::string AuditReportToJson(const AuditReport& report);

}  // namespace dpcore::audit

#endif  // DPCORE_AUDIT_H_
