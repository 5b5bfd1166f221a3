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

#ifndef DPCORE_LOGISTIC_REGRESSION_H_
#define DPCORE_LOGISTIC_REGRESSION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/matrix.h"
#include "dpcore/random.h"
#include "dpcore/vector_mechanism.h"

namespace dpcore::models {

struct LogisticRegressionOptions {
  double epsilon = 1.0;
  // Upper bound R on the row norm, intercept column included. Computed from
  // the data (and reported as a privacy leak) when absent. Longer rows are
  // scaled down onto the ball of radius R.
  std::optional<double> data_norm;
  double lambda = 0.01;
  bool fit_intercept = true;
  std::size_t max_iterations = 10000;
  double tolerance = 1e-8;
};

struct OptimizerTrace {
  std::size_t iterations = 0;
  double gradient_norm = 0;
  bool converged = false;
  // Objective value after every accepted step, starting at w = 0.
  std::vector<double> loss_history;
};

struct LogRegModel {
  // classes[1] is the positive class.
  std::vector<std::string> classes;
  // Original-scale weights; the intercept is separate.
  std::vector<double> coefficients;
  double intercept = 0;
  double data_norm = 0;
  double lambda = 0;
  bool fit_intercept = true;
  double epsilon = 0;
  OptimizerTrace trace;
};

// (1/n) sum_i log(1 + exp(-y_i w.x_i)) + (lambda/2) ||w||^2 with y_i = +-1.
// `rows` and `signs` are captured by value.
DifferentiableObjective LogisticObjective(Matrix rows, std::vector<double> signs,
                                          double lambda);

// Gradient descent with a backtracking (Armijo) line search. Stops when the
// gradient norm is at most `tolerance` or after `max_iterations` steps.
std::vector<double> MinimizeObjective(const PerturbedObjective& objective,
                                      std::size_t max_iterations, double tolerance,
                                      OptimizerTrace* trace = nullptr);

// Binary logistic regression trained by objective perturbation.
LogRegModel FitLogisticRegression(const Matrix& x, std::span<const std::string> y,
                                  const LogisticRegressionOptions& options,
                                  RandomSource& rng, Diagnostics& diagnostics,
                                  BudgetLedger* ledger = nullptr);

// Same pipeline with a zero noise vector and no surcharge.
LogRegModel FitLogisticRegressionNonPrivate(const Matrix& x,
                                            std::span<const std::string> y,
                                            const LogisticRegressionOptions& options);

// w.x + b on the original scale.
double DecisionFunction(const LogRegModel& model, std::span<const double> row);

// classes[1] iff the decision function is >= 0.
std::vector<std::string> PredictLogisticRegression(const LogRegModel& model,
                                                   const Matrix& x);

}  // namespace dpcore::models

#endif  // DPCORE_LOGISTIC_REGRESSION_H_
