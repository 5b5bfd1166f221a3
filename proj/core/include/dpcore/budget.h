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

#ifndef DPCORE_BUDGET_H_
#define DPCORE_BUDGET_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dpcore {

// Splits `epsilon` into `shares` equal parts. The last part absorbs the
// rounding residue so that summing the result left to right reproduces
// `epsilon` exactly.
std::vector<double> SplitBudget(double epsilon, std::size_t shares);

// Records every mechanism invocation made by a composite computation so the
// per-record privacy cost can be checked after the fact.
//
// Invocations are grouped by `stage` (stages compose sequentially: every
// record takes part in every stage) and, within a stage, by `partition`
// (partitions are disjoint subsets of the records and compose in parallel).
// A record's total cost is the sum over stages of the epsilon spent in the
// partition it belongs to; the worst case over records is therefore the sum
// over stages of the most expensive partition.
class BudgetLedger {
 public:
  struct Entry {
    std::string stage;
    std::string partition;
    std::string mechanism;
    double epsilon;
    double delta;
  };

  void Record(std::string stage, std::string partition, std::string mechanism,
              double epsilon, double delta = 0.0);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Stages in first-seen order.
  std::vector<std::string> Stages() const;
  // Partitions of `stage` in first-seen order.
  std::vector<std::string> Partitions(const std::string& stage) const;
  // Epsilon spent in one partition of one stage, summed in recording order.
  double PartitionEpsilon(const std::string& stage,
                          const std::string& partition) const;
  // Sum over stages of the largest partition spend, in stage order.
  double WorstCaseEpsilon() const;

 private:
  std::vector<Entry> entries_;
};

// Records into `ledger` when it is non-null.
inline void RecordSpend(BudgetLedger* ledger, std::string stage,
                        std::string partition, std::string mechanism,
                        double epsilon, double delta = 0.0) {
  if (ledger != nullptr) {
    ledger->Record(std::move(stage), std::move(partition), std::move(mechanism),
                   epsilon, delta);
  }
}

}  // namespace dpcore

#endif  // DPCORE_BUDGET_H_
