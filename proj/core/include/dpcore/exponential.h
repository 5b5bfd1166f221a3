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

#ifndef DPCORE_EXPONENTIAL_H_
#define DPCORE_EXPONENTIAL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore {

// Symmetric utility over an ordered label domain, with the sensitivity used
// in the exponent. u(a, a) must be the maximum of row a.
class UtilityTable {
 public:
  // `utility` is row-major, domain.size() x domain.size().
  UtilityTable(std::vector<std::string> domain, std::vector<double> utility,
               double delta_u);

  const std::vector<std::string>& domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  double delta_u() const { return delta_u_; }
  double utility(std::size_t a, std::size_t b) const {
    return utility_[a * domain_.size() + b];
  }
  // Throws ParameterError for unknown labels.
  std::size_t IndexOf(std::string_view label) const;

 private:
  std::vector<std::string> domain_;
  std::vector<double> utility_;
  double delta_u_;
};

// Output distribution: P(r) proportional to exp(epsilon u(input, r) /
// (2 delta_u)), normalised after subtracting the row maximum. An infinite
// epsilon puts uniform mass on the maximisers.
std::vector<double> ExponentialProbabilities(const UtilityTable& table,
                                             std::size_t input,
                                             double epsilon);

class Exponential {
 public:
  Exponential(UtilityTable table, const PrivacyParams& params);

  const UtilityTable& table() const { return table_; }
  std::vector<double> Probabilities(std::string_view input) const;
  // Inverse CDF over the cumulative weights in domain order.
  const std::string& Randomise(std::string_view input, RandomSource& rng) const;

 private:
  UtilityTable table_;
  double epsilon_;
};

std::string ExponentialSample(std::string_view input, const UtilityTable& table,
                              const PrivacyParams& params, RandomSource& rng);

// Rooted label tree. A node without children is a leaf.
struct Hierarchy {
  std::string label;
  std::vector<Hierarchy> children;

  bool is_leaf() const { return children.empty(); }
};

// Parses nested list notation, e.g. [["a", "b"], ["c", ["d", "e"]]]: arrays
// are internal nodes and strings are leaves.
Hierarchy ParseHierarchy(std::string_view json);

// Utility u(a, b) = -(number of levels between the lowest common ancestor of
// a and b and the leaf level), with shallow leaves padded down to the
// deepest level. So u(a, a) = 0 and siblings score -1. The sensitivity is
// the spread max u - min u. Throws StructureError on duplicate leaves or
// fewer than two leaves.
UtilityTable HierarchyUtilities(const Hierarchy& hierarchy);

// Exponential mechanism whose utility comes from a hierarchy.
class ExponentialHierarchical {
 public:
  ExponentialHierarchical(const Hierarchy& hierarchy,
                          const PrivacyParams& params);

  const UtilityTable& table() const { return mechanism_.table(); }
  std::vector<double> Probabilities(std::string_view input) const {
    return mechanism_.Probabilities(input);
  }
  const std::string& Randomise(std::string_view input, RandomSource& rng) const {
    return mechanism_.Randomise(input, rng);
  }

 private:
  Exponential mechanism_;
};

}  // namespace dpcore

#endif  // DPCORE_EXPONENTIAL_H_
