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

#ifndef DPCORE_HISTOGRAM_H_
#define DPCORE_HISTOGRAM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpcore/bounds.h"
#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/matrix.h"
#include "dpcore/random.h"

namespace dpcore::tools {

// Binning of one dimension: explicit edges, or `bins` equal-width bins over
// `range`. Without either a range is derived from the data, which is a
// privacy leak and is reported as such.
struct AxisSpec {
  std::vector<double> edges;
  std::size_t bins = 10;
  std::optional<Bounds> range;
};

struct HistogramSpec {
  std::vector<AxisSpec> axes;
  bool density = false;
};

struct HistogramResult {
  // Row-major over `shape` (last axis fastest).
  std::vector<double> values;
  std::vector<std::vector<double>> edges;
  std::vector<std::size_t> shape;
};

// Resolves an axis to explicit, strictly increasing edges. `column` is only
// consulted (and a diagnostic emitted) when the axis carries no range.
std::vector<double> ResolveEdges(const AxisSpec& axis,
                                 std::span<const double> column,
                                 Diagnostics& diagnostics);

// Exact counts over the bins. Bins are half-open except the last, which
// includes its right edge; values outside the edges are dropped.
std::vector<std::uint64_t> ExactHistogramCounts(
    const Matrix& data, const std::vector<std::vector<double>>& edges);

// Differentially private d-dimensional histogram. Bins are disjoint, so every
// count is perturbed with the full epsilon by the two-sided geometric
// mechanism (sensitivity 1) and floored at zero. In density mode the noisy
// counts are divided by (noisy total * bin volume), the total floored at one.
HistogramResult DpHistogramDD(const Matrix& data, const HistogramSpec& spec,
                              double epsilon, RandomSource& rng,
                              Diagnostics& diagnostics,
                              BudgetLedger* ledger = nullptr);

HistogramResult DpHistogram(std::span<const double> values, const AxisSpec& axis,
                            bool density, double epsilon, RandomSource& rng,
                            Diagnostics& diagnostics,
                            BudgetLedger* ledger = nullptr);

HistogramResult DpHistogram2d(std::span<const double> x,
                              std::span<const double> y, const AxisSpec& x_axis,
                              const AxisSpec& y_axis, bool density,
                              double epsilon, RandomSource& rng,
                              Diagnostics& diagnostics,
                              BudgetLedger* ledger = nullptr);

}  // namespace dpcore::tools

#endif  // DPCORE_HISTOGRAM_H_
