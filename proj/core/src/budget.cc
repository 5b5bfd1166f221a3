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

#include "dpcore/budget.h"

#include <algorithm>
#include <utility>

#include "dpcore/errors.h"

namespace dpcore {

std::vector<double> SplitBudget(double epsilon, std::size_t shares) {
  if (shares == 0) throw ParameterError("budget must be split into >= 1 share");
  std::vector<double> out(shares, epsilon / static_cast<double>(shares));
  double partial = 0;
  for (std::size_t i = 0; i + 1 < shares; ++i) partial += out[i];
  out.back() = epsilon - partial;
  return out;
}

void BudgetLedger::Record(std::string stage, std::string partition,
                          std::string mechanism, double epsilon, double delta) {
  entries_.push_back({std::move(stage), std::move(partition),
                      std::move(mechanism), epsilon, delta});
}

std::vector<std::string> BudgetLedger::Stages() const {
  std::vector<std::string> stages;
  for (const Entry& e : entries_) {
    if (std::find(stages.begin(), stages.end(), e.stage) == stages.end()) {
      stages.push_back(e.stage);
    }
  }
  return stages;
}

std::vector<std::string> BudgetLedger::Partitions(
    const std::string& stage) const {
  std::vector<std::string> partitions;
  for (const Entry& e : entries_) {
    if (e.stage == stage && std::find(partitions.begin(), partitions.end(),
                                      e.partition) == partitions.end()) {
      partitions.push_back(e.partition);
    }
  }
  return partitions;
}

double BudgetLedger::PartitionEpsilon(const std::string& stage,
                                      const std::string& partition) const {
  double total = 0;
  for (const Entry& e : entries_) {
    if (e.stage == stage && e.partition == partition) total += e.epsilon;
  }
  return total;
}

double BudgetLedger::WorstCaseEpsilon() const {
  double total = 0;
  for (const std::string& stage : Stages()) {
    double worst = 0;
    for (const std::string& partition : Partitions(stage)) {
      worst = std::max(worst, PartitionEpsilon(stage, partition));
    }
    total += worst;
  }
  return total;
}

}  // namespace dpcore
