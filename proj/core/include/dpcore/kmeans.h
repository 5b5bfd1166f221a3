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

#ifndef DPCORE_KMEANS_H_
#define DPCORE_KMEANS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "dpcore/bounds.h"
#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/matrix.h"
#include "dpcore/random.h"

namespace dpcore::models {

struct KMeansOptions {
  std::size_t k = 2;
  double epsilon = 1.0;
  std::optional<std::vector<Bounds>> bounds;
  // Fixed; there is no data-dependent early stop.
  std::size_t iterations = 5;
  // Public starting centroids. Drawn uniformly inside the bounds otherwise.
  std::optional<std::vector<std::vector<double>>> initial_centroids;
};

struct KMeansModel {
  std::vector<std::vector<double>> centroids;
  std::vector<Bounds> bounds;
  std::size_t iterations = 0;
  double epsilon = 0;
};

// Differentially private Lloyd iterations. Each iteration spends epsilon / T,
// split evenly between the cluster count and the d coordinate sums. Clusters
// are disjoint, so they compose in parallel within an iteration.
//
//  * count: two-sided geometric folded onto [0.5, n + 0.5], hence an integer
//    in [1, n];
//  * sum_j: bounded-domain Laplace on [count * L_j, count * U_j] with
//    sensitivity max(|L_j|, |U_j|), capped at the domain width;
//  * centroid_j = sum_j / count, truncated to [L_j, U_j].
KMeansModel FitKMeans(const Matrix& x, const KMeansOptions& options,
                      RandomSource& rng, Diagnostics& diagnostics,
                      BudgetLedger* ledger = nullptr);

// Index of the nearest centroid (Euclidean); ties go to the lowest index.
std::size_t NearestCentroid(const std::vector<std::vector<double>>& centroids,
                            std::span<const double> point);

std::vector<std::size_t> PredictKMeans(const KMeansModel& model, const Matrix& x);

}  // namespace dpcore::models

#endif  // DPCORE_KMEANS_H_
