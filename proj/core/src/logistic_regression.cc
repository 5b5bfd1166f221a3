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

#include "dpcore/logistic_regression.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "dpcore/errors.h"

namespace dpcore::models {

namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

// log(1 + exp(-m)) without overflow.
double LogisticLoss(double m) {
  return m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

// 1 / (1 + exp(m)).
double Sigmoid(double m) {
  if (m > 0) {
    const double e = std::exp(-m);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(m));
}

struct Prepared {
  std::vector<std::string> classes;
  Matrix rows;  // scaled by 1/R, intercept column appended when enabled
  std::vector<double> signs;
  double data_norm = 1;
};

Prepared Prepare(const Matrix& x, std::span<const std::string> y,
                 const LogisticRegressionOptions& options, Diagnostics* diagnostics) {
  if (x.rows() != y.size()) throw DimensionError("X and y have different numbers of rows");
  if (x.rows() == 0 || x.cols() == 0) throw ParameterError("empty dataset");
  if (!(options.lambda > 0)) throw ParameterError("lambda must be positive");

  Prepared out;
  const std::set<std::string> unique(y.begin(), y.end());
  out.classes.assign(unique.begin(), unique.end());
  if (out.classes.size() > 2) throw ParameterError("multi-class not supported");
  if (out.classes.size() < 2) throw ParameterError("logistic regression needs two classes");

  const std::size_t d = x.cols() + (options.fit_intercept ? 1 : 0);
  Matrix augmented(x.rows(), d, 0.0);
  double largest = 0;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t j = 0; j < x.cols(); ++j) augmented(r, j) = x(r, j);
    if (options.fit_intercept) augmented(r, d - 1) = 1.0;
    largest = std::max(largest, Norm(augmented.Row(r)));
  }

  if (options.data_norm.has_value()) {
    if (!(*options.data_norm > 0) || !std::isfinite(*options.data_norm)) {
      throw ParameterError("data_norm must be positive and finite");
    }
    out.data_norm = *options.data_norm;
  } else {
    out.data_norm = largest > 0 ? largest : 1.0;
    if (diagnostics != nullptr) {
      std::ostringstream value;
      value.precision(17);
      value << out.data_norm;
      diagnostics->EmitPrivacyLeak(
          "Data norm has not been specified and will be calculated on the data",
          {{"data_norm", value.str()}});
    }
  }

  for (std::size_t r = 0; r < augmented.rows(); ++r) {
    const double norm = Norm(augmented.Row(r));
    const double scale = norm > out.data_norm ? 1.0 / norm : 1.0 / out.data_norm;
    for (std::size_t j = 0; j < d; ++j) augmented(r, j) *= scale;
  }
  out.rows = std::move(augmented);

  out.signs.reserve(y.size());
  for (const auto& label : y) out.signs.push_back(label == out.classes[1] ? 1.0 : -1.0);
  return out;
}

LogRegModel Finish(const Prepared& prepared, const std::vector<double>& w,
                   const LogisticRegressionOptions& options, OptimizerTrace trace) {
  LogRegModel model;
  model.classes = prepared.classes;
  model.data_norm = prepared.data_norm;
  model.lambda = options.lambda;
  model.fit_intercept = options.fit_intercept;
  model.epsilon = options.epsilon;
  const std::size_t features = w.size() - (options.fit_intercept ? 1 : 0);
  model.coefficients.resize(features);
  for (std::size_t j = 0; j < features; ++j) model.coefficients[j] = w[j] / prepared.data_norm;
  if (options.fit_intercept) model.intercept = w.back() / prepared.data_norm;
  model.trace = std::move(trace);
  return model;
}

}  // namespace

DifferentiableObjective LogisticObjective(Matrix rows, std::vector<double> signs,
                                          double lambda) {
  const std::size_t d = rows.cols();
  auto shared_rows = std::make_shared<const Matrix>(std::move(rows));
  auto shared_signs = std::make_shared<const std::vector<double>>(std::move(signs));

  DifferentiableObjective objective;
  objective.dimension = d;
  objective.value = [shared_rows, shared_signs, lambda](std::span<const double> w) {
    const Matrix& x = *shared_rows;
    double total = 0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      total += LogisticLoss((*shared_signs)[r] * Dot(x.Row(r), w));
    }
    return total / static_cast<double>(x.rows()) + 0.5 * lambda * Dot(w, w);
  };
  objective.gradient = [shared_rows, shared_signs, lambda](std::span<const double> w) {
    const Matrix& x = *shared_rows;
    std::vector<double> g(w.size(), 0.0);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      const double y = (*shared_signs)[r];
      const auto row = x.Row(r);
      const double coef = -y * Sigmoid(y * Dot(row, w));
      for (std::size_t j = 0; j < g.size(); ++j) g[j] += coef * row[j];
    }
    const auto n = static_cast<double>(x.rows());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = g[j] / n + lambda * w[j];
    return g;
  };
  return objective;
}

std::vector<double> MinimizeObjective(const PerturbedObjective& objective,
                                      std::size_t max_iterations, double tolerance,
                                      OptimizerTrace* trace) {
  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-20;
  std::vector<double> w(objective.dimension(), 0.0);
  double f = objective.Value(w);
  std::vector<double> g = objective.Gradient(w);
  double gradient_norm = Norm(g);
  double step = 1.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> history{f};

  std::vector<double> candidate(w.size());
  while (true) {
    if (gradient_norm <= tolerance) {
      converged = true;
      break;
    }
    if (iterations >= max_iterations) break;

    double t = 2.0 * step;
    bool accepted = false;
    double f_new = 0;
    std::vector<double> g_new;
    while (t >= kMinStep) {
      for (std::size_t j = 0; j < w.size(); ++j) candidate[j] = w[j] - t * g[j];
      f_new = objective.Value(candidate);
      if (f_new <= f - kArmijo * t * gradient_norm * gradient_norm) {
        g_new = objective.Gradient(candidate);
        accepted = true;
        break;
      }
      // Near the optimum the sufficient-decrease test drowns in rounding;
      // accept a step that does not increase the value and shrinks the
      // gradient.
      if (f_new <= f) {
        g_new = objective.Gradient(candidate);
        if (Norm(g_new) < gradient_norm) {
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) break;

    w = candidate;
    f = f_new;
    g = std::move(g_new);
    gradient_norm = Norm(g);
    step = t;
    ++iterations;
    history.push_back(f);
  }

  if (trace != nullptr) {
    trace->iterations = iterations;
    trace->gradient_norm = gradient_norm;
    trace->converged = converged;
    trace->loss_history = std::move(history);
  }
  return w;
}

LogRegModel FitLogisticRegression(const Matrix& x, std::span<const std::string> y,
                                  const LogisticRegressionOptions& options,
                                  RandomSource& rng, Diagnostics& diagnostics,
                                  BudgetLedger* ledger) {
  if (!(options.epsilon > 0)) throw ParameterError("epsilon must be positive");
  Prepared prepared = Prepare(x, y, options, &diagnostics);
  const std::size_t n = prepared.rows.rows();
  const std::size_t d = prepared.rows.cols();

  VectorMechanismConfig config{PrivacyParams(options.epsilon), d, options.lambda,
                               0.25, 1.0, n};
  const PerturbedObjective objective = VectorRandomise(
      LogisticObjective(prepared.rows, prepared.signs, options.lambda), config, rng);
  RecordSpend(ledger, "logreg", "all", "vector", options.epsilon);

  OptimizerTrace trace;
  const std::vector<double> w =
      MinimizeObjective(objective, options.max_iterations, options.tolerance, &trace);
  return Finish(prepared, w, options, std::move(trace));
}

LogRegModel FitLogisticRegressionNonPrivate(const Matrix& x,
                                            std::span<const std::string> y,
                                            const LogisticRegressionOptions& options) {
  Prepared prepared = Prepare(x, y, options, nullptr);
  const std::size_t n = prepared.rows.rows();
  const std::size_t d = prepared.rows.cols();
  const PerturbedObjective objective(
      LogisticObjective(prepared.rows, prepared.signs, options.lambda),
      std::vector<double>(d, 0.0), 0.0, n);
  OptimizerTrace trace;
  const std::vector<double> w =
      MinimizeObjective(objective, options.max_iterations, options.tolerance, &trace);
  return Finish(prepared, w, options, std::move(trace));
}

double DecisionFunction(const LogRegModel& model, std::span<const double> row) {
  return Dot(model.coefficients, row) + model.intercept;
}

std::vector<std::string> PredictLogisticRegression(const LogRegModel& model,
                                                   const Matrix& x) {
  if (model.classes.size() != 2) throw ParameterError("model is not fitted");
  if (x.cols() != model.coefficients.size()) {
    throw DimensionError("expected " + std::to_string(model.coefficients.size()) +
                         " features, got " + std::to_string(x.cols()));
  }
  std::vector<std::string> out;
  out.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    out.push_back(DecisionFunction(model, x.Row(r)) >= 0 ? model.classes[1]
                                                         : model.classes[0]);
  }
  return out;
}

}  // namespace dpcore::models
