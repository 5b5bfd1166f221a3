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

#include "dpcore/histogram.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dpcore/errors.h"
#include "dpcore/geometric.h"

namespace dpcore::tools {

namespace {

// Bin index of `value`, or -1 when it falls outside the edges.
std::ptrdiff_t BinOf(double value, const std::vector<double>& edges) {
  if (!(value >= edges.front() && value <= edges.back())) return -1;
  if (value == edges.back()) return static_cast<std::ptrdiff_t>(edges.size()) - 2;
  const auto it = std::upper_bound(edges.begin(), edges.end(), value);
  return static_cast<std::ptrdiff_t>(it - edges.begin()) - 1;
}

std::string FormatDouble(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

}  // namespace

std::vector<double> ResolveEdges(const AxisSpec& axis,
                                 std::span<const double> column,
                                 Diagnostics& diagnostics) {
  if (!axis.edges.empty()) {
    if (axis.edges.size() < 2) throw SpecError("need at least two bin edges");
    for (std::size_t i = 0; i + 1 < axis.edges.size(); ++i) {
      if (!(axis.edges[i] < axis.edges[i + 1])) {
        throw SpecError("bin edges must be strictly increasing");
      }
    }
    return axis.edges;
  }
  if (axis.bins == 0) throw SpecError("bin count must be >= 1");

  Bounds range(0, 1);
  if (axis.range.has_value()) {
    range = *axis.range;
  } else {
    if (!column.empty()) {
      range = BoundsOf(column);
      if (range.width() == 0) {
        range = Bounds(range.lower() - 0.5, range.upper() + 0.5);
      }
    }
    diagnostics.EmitPrivacyLeak(
        "Range has not been specified and will be calculated on the data",
        {{"range", "[" + FormatDouble(range.lower()) + ", " +
                       FormatDouble(range.upper()) + "]"}});
  }
  if (!(range.width() > 0)) throw SpecError("histogram range must have width");

  std::vector<double> edges(axis.bins + 1);
  for (std::size_t i = 0; i <= axis.bins; ++i) {
    edges[i] = range.lower() +
               range.width() * static_cast<double>(i) / static_cast<double>(axis.bins);
  }
  edges.back() = range.upper();
  return edges;
}

std::vector<std::uint64_t> ExactHistogramCounts(
    const Matrix& data, const std::vector<std::vector<double>>& edges) {
  if (data.cols() != edges.size()) {
    throw DimensionError("histogram needs one edge list per data column");
  }
  std::size_t total = 1;
  for (const auto& e : edges) total *= e.size() - 1;
  std::vector<std::uint64_t> counts(total, 0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    std::size_t flat = 0;
    bool inside = true;
    for (std::size_t c = 0; c < data.cols(); ++c) {
      const std::ptrdiff_t bin = BinOf(data(r, c), edges[c]);
      if (bin < 0) {
        inside = false;
        break;
      }
      flat = flat * (edges[c].size() - 1) + static_cast<std::size_t>(bin);
    }
    if (inside) ++counts[flat];
  }
  return counts;
}

HistogramResult DpHistogramDD(const Matrix& data, const HistogramSpec& spec,
                              double epsilon, RandomSource& rng,
                              Diagnostics& diagnostics, BudgetLedger* ledger) {
  if (spec.axes.size() != data.cols()) {
    throw SpecError("histogram spec must describe every data column");
  }
  if (spec.axes.empty()) throw SpecError("histogram needs at least one axis");

  HistogramResult result;
  for (std::size_t c = 0; c < data.cols(); ++c) {
    const std::vector<double> column = data.Column(c);
    result.edges.push_back(ResolveEdges(spec.axes[c], column, diagnostics));
    result.shape.push_back(result.edges.back().size() - 1);
  }

  const std::vector<std::uint64_t> exact = ExactHistogramCounts(data, result.edges);
  const Geometric mechanism(
      GeometricConfig{PrivacyParams(epsilon), 1, std::nullopt}, PostProcess::kNone);

  result.values.resize(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const std::int64_t noisy =
        mechanism.Randomise(static_cast<std::int64_t>(exact[i]), rng);
    result.values[i] = static_cast<double>(std::max<std::int64_t>(noisy, 0));
    RecordSpend(ledger, "histogram", "bin " + std::to_string(i), "geometric",
                epsilon);
  }

  if (spec.density) {
    double total = 0;
    for (double v : result.values) total += v;
    total = std::max(total, 1.0);
    std::vector<std::size_t> index(result.shape.size(), 0);
    for (std::size_t i = 0; i < result.values.size(); ++i) {
      double volume = 1;
      for (std::size_t d = 0; d < index.size(); ++d) {
        volume *= result.edges[d][index[d] + 1] - result.edges[d][index[d]];
      }
      result.values[i] /= total * volume;
      for (std::size_t d = index.size(); d-- > 0;) {
        if (++index[d] < result.shape[d]) break;
        index[d] = 0;
      }
    }
  }
  return result;
}

HistogramResult DpHistogram(std::span<const double> values, const AxisSpec& axis,
                            bool density, double epsilon, RandomSource& rng,
                            Diagnostics& diagnostics, BudgetLedger* ledger) {
  const Matrix data(values.size(), 1,
                    std::vector<double>(values.begin(), values.end()));
  return DpHistogramDD(data, HistogramSpec{{axis}, density}, epsilon, rng,
                       diagnostics, ledger);
}

HistogramResult DpHistogram2d(std::span<const double> x,
                              std::span<const double> y, const AxisSpec& x_axis,
                              const AxisSpec& y_axis, bool density,
                              double epsilon, RandomSource& rng,
                              Diagnostics& diagnostics, BudgetLedger* ledger) {
  if (x.size() != y.size()) throw DimensionError("x and y lengths differ");
  Matrix data(x.size(), 2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    data(i, 0) = x[i];
    data(i, 1) = y[i];
  }
  return DpHistogramDD(data, HistogramSpec{{x_axis, y_axis}, density}, epsilon,
                       rng, diagnostics, ledger);
}

}  // namespace dpcore::tools
