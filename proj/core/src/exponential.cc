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

#include "dpcore/exponential.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "dpcore/errors.h"
#include "json.hpp"

namespace dpcore {

UtilityTable::UtilityTable(std::vector<std::string> domain,
                           std::vector<double> utility, double delta_u)
    : domain_(std::move(domain)), utility_(std::move(utility)), delta_u_(delta_u) {
  const std::size_t n = domain_.size();
  if (n == 0) throw StructureError("utility domain is empty");
  if (utility_.size() != n * n) {
    throw StructureError("utility matrix must be |domain| x |domain|");
  }
  if (std::set<std::string>(domain_.begin(), domain_.end()).size() != n) {
    throw StructureError("utility domain labels must be distinct");
  }
  if (!(delta_u_ > 0) || !std::isfinite(delta_u_)) {
    throw ParameterError("utility sensitivity must be positive and finite");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!std::isfinite(this->utility(a, b))) {
        throw StructureError("utilities must be finite");
      }
      if (this->utility(a, b) != this->utility(b, a)) {
        throw StructureError("utility must be symmetric");
      }
      if (this->utility(a, b) > this->utility(a, a)) {
        throw StructureError("u(a, a) must be maximal in its row");
      }
    }
  }
}

std::size_t UtilityTable::IndexOf(std::string_view label) const {
  const auto it = std::find(domain_.begin(), domain_.end(), label);
  if (it == domain_.end()) {
    throw ParameterError("label '" + std::string(label) +
                         "' is not in the utility domain");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

std::vector<double> ExponentialProbabilities(const UtilityTable& table,
                                             std::size_t input,
                                             double epsilon) {
  const std::size_t n = table.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < n; ++r) best = std::max(best, table.utility(input, r));

  std::vector<double> weights(n);
  if (std::isinf(epsilon)) {
    for (std::size_t r = 0; r < n; ++r) {
      weights[r] = table.utility(input, r) == best ? 1.0 : 0.0;
    }
  } else {
    const double factor = epsilon / (2.0 * table.delta_u());
    for (std::size_t r = 0; r < n; ++r) {
      weights[r] = std::exp(factor * (table.utility(input, r) - best));
    }
  }
  double total = 0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  return weights;
}

Exponential::Exponential(UtilityTable table, const PrivacyParams& params)
    : table_(std::move(table)),
      epsilon_(ValidatePrivacyParams(params,
                                     {rules::EpsilonPositive(), rules::DeltaZero()},
                                     "exponential")
                   .epsilon()) {}

std::vector<double> Exponential::Probabilities(std::string_view input) const {
  return ExponentialProbabilities(table_, table_.IndexOf(input), epsilon_);
}

const std::string& Exponential::Randomise(std::string_view input,
                                          RandomSource& rng) const {
  const std::vector<double> probabilities = Probabilities(input);
  const double target = rng.Uniform();
  double cumulative = 0;
  std::size_t chosen = probabilities.size() - 1;
  for (std::size_t r = 0; r < probabilities.size(); ++r) {
    cumulative += probabilities[r];
    if (target < cumulative) {
      chosen = r;
      break;
    }
  }
  // Rounding can leave the cumulative sum just short of one; fall back to
  // the last label with positive mass.
  while (probabilities[chosen] == 0 && chosen > 0) --chosen;
  return table_.domain()[chosen];
}

std::string ExponentialSample(std::string_view input, const UtilityTable& table,
                              const PrivacyParams& params, RandomSource& rng) {
  return Exponential(table, params).Randomise(input, rng);
}

namespace {

Hierarchy FromJson(const nlohmann::json& node) {
  if (node.is_string()) return Hierarchy{node.get<std::string>(), {}};
  if (!node.is_array()) {
    throw StructureError("hierarchy nodes must be strings or arrays");
  }
  if (node.empty()) throw StructureError("hierarchy contains an empty group");
  Hierarchy out;
  for (const auto& child : node) out.children.push_back(FromJson(child));
  return out;
}

struct LeafPath {
  std::string label;
  // Pointers to the internal nodes from the root down to the leaf's parent.
  std::vector<const Hierarchy*> ancestors;
};

void CollectLeaves(const Hierarchy& node, std::vector<const Hierarchy*>& path,
                   std::vector<LeafPath>& out) {
  if (node.is_leaf()) {
    out.push_back({node.label, path});
    return;
  }
  path.push_back(&node);
  for (const Hierarchy& child : node.children) CollectLeaves(child, path, out);
  path.pop_back();
}

}  // namespace

Hierarchy ParseHierarchy(std::string_view json) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructureError(std::string("invalid hierarchy JSON: ") + e.what());
  }
  return FromJson(parsed);
}

UtilityTable HierarchyUtilities(const Hierarchy& hierarchy) {
  std::vector<LeafPath> leaves;
  std::vector<const Hierarchy*> path;
  CollectLeaves(hierarchy, path, leaves);
  if (leaves.size() < 2) {
    throw StructureError("hierarchy must have at least two leaves");
  }
  std::set<std::string> seen;
  for (const LeafPath& leaf : leaves) {
    if (!seen.insert(leaf.label).second) {
      throw StructureError("duplicate hierarchy leaf '" + leaf.label + "'");
    }
  }

  std::size_t height = 0;
  for (const LeafPath& leaf : leaves) height = std::max(height, leaf.ancestors.size());

  const std::size_t n = leaves.size();
  std::vector<std::string> domain;
  domain.reserve(n);
  for (const LeafPath& leaf : leaves) domain.push_back(leaf.label);

  std::vector<double> utility(n * n, 0.0);
  double lowest = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& pa = leaves[a].ancestors;
      const auto& pb = leaves[b].ancestors;
      std::size_t common = 0;
      while (common < pa.size() && common < pb.size() && pa[common] == pb[common]) {
        ++common;
      }
      // The lowest common ancestor sits at depth common - 1.
      const double u = -static_cast<double>(height - (common - 1));
      utility[a * n + b] = u;
      lowest = std::min(lowest, u);
    }
  }
  return UtilityTable(std::move(domain), std::move(utility), -lowest);
}

ExponentialHierarchical::ExponentialHierarchical(const Hierarchy& hierarchy,
                                                 const PrivacyParams& params)
    : mechanism_(HierarchyUtilities(hierarchy), params) {}

}  // namespace dpcore
