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

#include "dpcore/statistics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dpcore/bounded_laplace.h"
#include "dpcore/errors.h"
#include "dpcore/laplace.h"

namespace dpcore::tools {

namespace {

std::string FormatBounds(const Bounds& b) {
  std::ostringstream out;
  out.precision(17);
  out << "[" << b.lower() << ", " << b.upper() << "]";
  return out.str();
}

Bounds ResolveBounds(std::span<const double> values, const StatQuery& query,
                     Diagnostics& diagnostics) {
  if (query.bounds.has_value()) return *query.bounds;
  const Bounds derived = BoundsOf(values);
  diagnostics.EmitPrivacyLeak(
      "Bounds have not been specified and will be calculated on the data",
      {{"bounds", FormatBounds(derived)}});
  return derived;
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0) || std::isnan(epsilon)) {
    throw ParameterError("epsilon must be positive");
  }
}

}  // namespace

double DpMean(std::span<const double> values, const StatQuery& query,
              RandomSource& rng, Diagnostics& diagnostics, BudgetLedger* ledger) {
  CheckEpsilon(query.epsilon);
  if (values.empty()) throw ParameterError("mean of an empty array");
  const Bounds bounds = ResolveBounds(values, query, diagnostics);
  const double n = static_cast<double>(values.size());

  double sum = 0;
  for (double v : values) sum += Truncate(v, bounds);
  const double mean = sum / n;

  RecordSpend(ledger, "mean", "all", "laplace", query.epsilon);
  if (bounds.width() == 0) return mean;
  const Laplace mechanism(
      NumericMechanismConfig{PrivacyParams(query.epsilon), bounds.width() / n,
                             std::nullopt, std::nullopt});
  return mechanism.Randomise(mean, rng);
}

double DpVar(std::span<const double> values, const StatQuery& query,
             RandomSource& rng, Diagnostics& diagnostics, BudgetLedger* ledger) {
  CheckEpsilon(query.epsilon);
  if (values.size() < 2) throw ParameterError("variance needs at least 2 values");
  const Bounds bounds = ResolveBounds(values, query, diagnostics);
  const double n = static_cast<double>(values.size());

  double sum = 0;
  for (double v : values) sum += Truncate(v, bounds);
  const double mean = sum / n;
  double squares = 0;
  for (double v : values) {
    const double d = Truncate(v, bounds) - mean;
    squares += d * d;
  }
  const double width_sq = bounds.width() * bounds.width();
  const double ceiling = width_sq / 4.0;
  const double variance = std::clamp(squares / n, 0.0, ceiling);

  RecordSpend(ledger, "variance", "all", "laplace-bounded-domain", query.epsilon);
  if (ceiling == 0) return 0.0;
  const NumericMechanismConfig config{PrivacyParams(query.epsilon),
                                      std::min(width_sq / n, ceiling),
                                      Bounds(0.0, ceiling), std::nullopt};
  return BoundedDomainLaplace(config).Randomise(variance, rng);
}

double DpStd(std::span<const double> values, const StatQuery& query,
             RandomSource& rng, Diagnostics& diagnostics, BudgetLedger* ledger) {
  return std::sqrt(DpVar(values, query, rng, diagnostics, ledger));
}

}  // namespace dpcore::tools
