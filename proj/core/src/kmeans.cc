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

#include "dpcore/kmeans.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "dpcore/bounded_laplace.h"
#include "dpcore/errors.h"
#include "dpcore/geometric.h"

namespace dpcore::models {

std::size_t NearestCentroid(const std::vector<std::vector<double>>& centroids,
                            std::span<const double> point) {
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    double distance = 0;
    for (std::size_t j = 0; j < point.size(); ++j) {
      const double diff = point[j] - centroids[c][j];
      distance += diff * diff;
    }
    if (distance < best_distance) {
      best_distance = distance;
      best = c;
    }
  }
  return best;
}

KMeansModel FitKMeans(const Matrix& x, const KMeansOptions& options,
                      RandomSource& rng, Diagnostics& diagnostics,
                      BudgetLedger* ledger) {
  if (!(options.epsilon > 0)) throw ParameterError("epsilon must be positive");
  if (options.k < 1) throw ParameterError("k must be >= 1");
  if (options.iterations < 1) throw ParameterError("iterations must be >= 1");
  if (x.rows() == 0 || x.cols() == 0) throw ParameterError("empty dataset");
  if (options.k > x.rows()) throw ParameterError("k exceeds the number of samples");
  const std::size_t d = x.cols();
  const std::size_t k = options.k;
  const auto n = static_cast<double>(x.rows());

  KMeansModel model;
  model.epsilon = options.epsilon;
  model.iterations = options.iterations;
  if (options.bounds.has_value()) {
    if (options.bounds->size() != d) {
      throw DimensionError("one bound per feature is required");
    }
    model.bounds = *options.bounds;
  } else {
    std::ostringstream described;
    described.precision(17);
    for (std::size_t j = 0; j < d; ++j) {
      model.bounds.push_back(BoundsOf(x.Column(j)));
      described << (j ? ", " : "") << "(" << model.bounds[j].lower() << ", "
                << model.bounds[j].upper() << ")";
    }
    diagnostics.EmitPrivacyLeak(
        "Bounds have not been specified and will be calculated on the data",
        {{"bounds", "[" + described.str() + "]"}});
  }

  if (options.initial_centroids.has_value()) {
    model.centroids = *options.initial_centroids;
    if (model.centroids.size() != k) {
      throw DimensionError("initial centroid count must equal k");
    }
    for (auto& centroid : model.centroids) {
      if (centroid.size() != d) throw DimensionError("initial centroid dimension");
      for (std::size_t j = 0; j < d; ++j) centroid[j] = Truncate(centroid[j], model.bounds[j]);
    }
  } else {
    model.centroids.assign(k, std::vector<double>(d));
    for (auto& centroid : model.centroids) {
      for (std::size_t j = 0; j < d; ++j) {
        centroid[j] = model.bounds[j].lower() + rng.Uniform() * model.bounds[j].width();
      }
    }
  }

  const std::vector<double> per_iteration =
      SplitBudget(options.epsilon, options.iterations);
  const Bounds count_domain(0.5, n + 0.5);

  for (std::size_t t = 0; t < options.iterations; ++t) {
    const std::vector<double> shares = SplitBudget(per_iteration[t], d + 1);
    const std::string stage = "iteration " + std::to_string(t);

    std::vector<std::size_t> counts(k, 0);
    std::vector<std::vector<double>> sums(k, std::vector<double>(d, 0.0));
    for (std::size_t r = 0; r < x.rows(); ++r) {
      const std::size_t c = NearestCentroid(model.centroids, x.Row(r));
      ++counts[c];
      for (std::size_t j = 0; j < d; ++j) sums[c][j] += Truncate(x(r, j), model.bounds[j]);
    }

    const Geometric count_mechanism(
        GeometricConfig{PrivacyParams(shares[0]), 1, count_domain},
        PostProcess::kFold);
    for (std::size_t c = 0; c < k; ++c) {
      const std::string partition = "cluster " + std::to_string(c);
      const auto noisy_count = static_cast<double>(std::max<std::int64_t>(
          1, count_mechanism.Randomise(static_cast<std::int64_t>(counts[c]), rng)));
      RecordSpend(ledger, stage, partition, "geometric-folded", shares[0]);

      for (std::size_t j = 0; j < d; ++j) {
        const Bounds& b = model.bounds[j];
        const Bounds sum_domain(noisy_count * b.lower(), noisy_count * b.upper());
        double noisy_sum = sum_domain.lower();
        if (sum_domain.width() > 0) {
          const double sensitivity =
              std::min(std::max(std::abs(b.lower()), std::abs(b.upper())),
                       sum_domain.width());
          const BoundedDomainLaplace mechanism(NumericMechanismConfig{
              PrivacyParams(shares[1 + j]), sensitivity, sum_domain, std::nullopt});
          noisy_sum = mechanism.Randomise(Truncate(sums[c][j], sum_domain), rng);
        }
        RecordSpend(ledger, stage, partition, "laplace-bounded-domain",
                    shares[1 + j]);
        model.centroids[c][j] = Truncate(noisy_sum / noisy_count, b);
      }
    }
  }
  return model;
}

std::vector<std::size_t> PredictKMeans(const KMeansModel& model, const Matrix& x) {
  if (model.centroids.empty()) throw ParameterError("model has no centroids");
  if (x.cols() != model.centroids.front().size()) {
    throw DimensionError("feature count does not match the centroids");
  }
  std::vector<std::size_t> out;
  out.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    out.push_back(NearestCentroid(model.centroids, x.Row(r)));
  }
  return out;
}

}  // namespace dpcore::models
