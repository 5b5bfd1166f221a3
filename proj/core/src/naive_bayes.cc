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

#include "dpcore/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "dpcore/bounded_laplace.h"
#include "dpcore/errors.h"
#include "dpcore/geometric.h"
#include "dpcore/laplace.h"

namespace dpcore::models {

namespace {

std::vector<std::string> SortedClasses(std::span<const std::string> y) {
  const std::set<std::string> unique(y.begin(), y.end());
  return {unique.begin(), unique.end()};
}

std::vector<std::vector<std::size_t>> RowsByClass(
    std::span<const std::string> y, const std::vector<std::string>& classes) {
  std::vector<std::vector<std::size_t>> rows(classes.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto it = std::lower_bound(classes.begin(), classes.end(), y[i]);
    rows[static_cast<std::size_t>(it - classes.begin())].push_back(i);
  }
  return rows;
}

std::string FormatBoundsList(const std::vector<Bounds>& bounds) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (j > 0) out << ", ";
    out << "(" << bounds[j].lower() << ", " << bounds[j].upper() << ")";
  }
  out << "]";
  return out.str();
}

void CheckShapes(const Matrix& x, std::span<const std::string> y) {
  if (x.rows() != y.size()) {
    throw DimensionError("X and y have different numbers of rows");
  }
  if (x.rows() == 0) throw ParameterError("cannot fit on an empty dataset");
  if (x.cols() == 0) throw DimensionError("X has no features");
}

}  // namespace

std::vector<double> NBModel::Priors() const {
  double total = 0;
  for (double c : class_counts) total += c;
  std::vector<double> priors(class_counts.size());
  for (std::size_t c = 0; c < priors.size(); ++c) priors[c] = class_counts[c] / total;
  return priors;
}

NBModel FitGaussianNB(const Matrix& x, std::span<const std::string> y,
                      const GaussianNBOptions& options, RandomSource& rng,
                      Diagnostics& diagnostics, BudgetLedger* ledger) {
  CheckShapes(x, y);
  if (!(options.epsilon > 0)) throw ParameterError("epsilon must be positive");
  const std::size_t d = x.cols();

  NBModel model;
  model.epsilon = options.epsilon;
  model.classes = SortedClasses(y);
  if (model.classes.size() < 2) {
    throw ParameterError("naive Bayes needs at least two classes");
  }

  if (options.bounds.has_value()) {
    if (options.bounds->size() != d) {
      throw DimensionError("one bound per feature is required");
    }
    model.bounds = *options.bounds;
  } else {
    for (std::size_t j = 0; j < d; ++j) model.bounds.push_back(BoundsOf(x.Column(j)));
    diagnostics.EmitPrivacyLeak(
        "Bounds have not been specified and will be calculated on the data",
        {{"bounds", FormatBoundsList(model.bounds)}});
  }

  const std::vector<double> shares = SplitBudget(options.epsilon, 2 * d + 1);
  const auto rows = RowsByClass(y, model.classes);
  const auto n_total = static_cast<std::int64_t>(x.rows());

  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const std::string partition = "class=" + model.classes[c];
    const auto& members = rows[c];
    if (members.empty()) {
      throw ParameterError("class '" + model.classes[c] + "' has no samples");
    }
    const double n_c = static_cast<double>(members.size());

    const Geometric count_mechanism(
        GeometricConfig{PrivacyParams(shares[0]), 1,
                        Bounds(1.0, static_cast<double>(n_total))},
        PostProcess::kTruncate);
    model.class_counts.push_back(static_cast<double>(count_mechanism.Randomise(
        static_cast<std::int64_t>(members.size()), rng)));
    RecordSpend(ledger, "naive-bayes", partition, "geometric-truncated", shares[0]);

    std::vector<double> means(d);
    std::vector<double> variances(d);
    for (std::size_t j = 0; j < d; ++j) {
      const Bounds& b = model.bounds[j];
      double sum = 0;
      for (std::size_t i : members) sum += Truncate(x(i, j), b);
      const double mean = sum / n_c;
      double squares = 0;
      for (std::size_t i : members) {
        const double dev = Truncate(x(i, j), b) - mean;
        squares += dev * dev;
      }
      const double width_sq = b.width() * b.width();
      const double ceiling = width_sq / 4.0;
      const double variance = std::clamp(squares / n_c, 0.0, ceiling);

      const double mean_share = shares[1 + j];
      const double var_share = shares[1 + d + j];
      if (b.width() > 0) {
        means[j] = Laplace(NumericMechanismConfig{PrivacyParams(mean_share),
                                                  b.width() / n_c, std::nullopt,
                                                  std::nullopt})
                       .Randomise(mean, rng);
        variances[j] = BoundedDomainLaplace(
                           NumericMechanismConfig{PrivacyParams(var_share),
                                                  std::min(width_sq / n_c, ceiling),
                                                  Bounds(0.0, ceiling), std::nullopt})
                           .Randomise(variance, rng);
      } else {
        means[j] = mean;
        variances[j] = 0.0;
      }
      RecordSpend(ledger, "naive-bayes", partition, "laplace", mean_share);
      RecordSpend(ledger, "naive-bayes", partition, "laplace-bounded-domain",
                  var_share);
    }
    model.means.push_back(std::move(means));
    model.variances.push_back(std::move(variances));
  }
  return model;
}

NBModel FitGaussianNBNonPrivate(const Matrix& x, std::span<const std::string> y) {
  CheckShapes(x, y);
  const std::size_t d = x.cols();
  NBModel model;
  model.classes = SortedClasses(y);
  for (std::size_t j = 0; j < d; ++j) model.bounds.push_back(BoundsOf(x.Column(j)));
  const auto rows = RowsByClass(y, model.classes);
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const double n_c = static_cast<double>(rows[c].size());
    std::vector<double> means(d, 0.0);
    std::vector<double> variances(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i : rows[c]) means[j] += x(i, j);
      means[j] /= n_c;
      for (std::size_t i : rows[c]) {
        variances[j] += (x(i, j) - means[j]) * (x(i, j) - means[j]);
      }
      variances[j] /= n_c;
    }
    model.class_counts.push_back(n_c);
    model.means.push_back(std::move(means));
    model.variances.push_back(std::move(variances));
  }
  return model;
}

std::vector<std::string> PredictGaussianNB(const NBModel& model, const Matrix& x) {
  const std::size_t d = model.num_features();
  if (x.cols() != d) {
    throw DimensionError("expected " + std::to_string(d) + " features, got " +
                         std::to_string(x.cols()));
  }
  if (model.classes.empty()) throw ParameterError("model has no classes");

  double largest = 0;
  for (const auto& row : model.variances) {
    for (double v : row) largest = std::max(largest, v);
  }
  const double floor = largest > 0 ? 1e-9 * largest : 1e-9;

  const std::vector<double> priors = model.Priors();
  std::vector<std::string> out;
  out.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
      double score = std::log(priors[c]);
      for (std::size_t j = 0; j < d; ++j) {
        const double var = std::max(model.variances[c][j], 0.0) + floor;
        const double dev = x(r, j) - model.means[c][j];
        score += -0.5 * std::log(2.0 * std::numbers::pi * var) -
                 dev * dev / (2.0 * var);
      }
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    out.push_back(model.classes[best]);
  }
  return out;
}

}  // namespace dpcore::models
