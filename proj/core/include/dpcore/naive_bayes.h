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

#ifndef DPCORE_NAIVE_BAYES_H_
#define DPCORE_NAIVE_BAYES_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcore/bounds.h"
#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/matrix.h"
#include "dpcore/random.h"

namespace dpcore::models {

struct GaussianNBOptions {
  double epsilon = 1.0;
  // One interval per feature. Missing bounds are computed from the data and
  // reported as a privacy leak.
  std::optional<std::vector<Bounds>> bounds;
};

// Per-class sufficient statistics of a Gaussian naive Bayes classifier.
struct NBModel {
  std::vector<std::string> classes;
  std::vector<double> class_counts;
  // [class][feature]
  std::vector<std::vector<double>> means;
  std::vector<std::vector<double>> variances;
  std::vector<Bounds> bounds;
  double epsilon = 0;

  std::size_t num_features() const { return bounds.size(); }
  std::vector<double> Priors() const;
};

// Fits a differentially private Gaussian naive Bayes model.
//
// Classes partition the records, so they compose in parallel. Within a class
// the budget is split uniformly into 2d + 1 shares: one for the class count
// (geometric, truncated to [1, n]), one per feature mean (Laplace with
// sensitivity (U - L) / n_c) and one per feature variance (bounded-domain
// Laplace on [0, (U - L)^2 / 4] with sensitivity (U - L)^2 / n_c).
//
// Requires at least two classes.
NBModel FitGaussianNB(const Matrix& x, std::span<const std::string> y,
                      const GaussianNBOptions& options, RandomSource& rng,
                      Diagnostics& diagnostics, BudgetLedger* ledger = nullptr);

// The same statistics without noise or clamping; for baselines.
NBModel FitGaussianNBNonPrivate(const Matrix& x, std::span<const std::string> y);

// argmax_c ln prior_c + sum_j ln N(x_j; mean_cj, var_cj + floor) where
// floor = 1e-9 * the largest variance. Ties go to the lowest class index.
std::vector<std::string> PredictGaussianNB(const NBModel& model, const Matrix& x);

}  // namespace dpcore::models

#endif  // DPCORE_NAIVE_BAYES_H_
