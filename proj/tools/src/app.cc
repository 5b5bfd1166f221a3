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

#include "dpcore/cli/app.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpcore/audit.h"
#include "dpcore/budget.h"
#include "dpcore/cli/audit_catalog.h"
#include "dpcore/cli/dataset.h"
#include "dpcore/cli/experiment.h"
#include "dpcore/errors.h"
#include "dpcore/histogram.h"
#include "dpcore/kmeans.h"
#include "dpcore/logistic_regression.h"
#include "dpcore/model_io.h"
#include "dpcore/naive_bayes.h"
#include "dpcore/statistics.h"

namespace dpcore::cli {

namespace {

using nlohmann::json;

struct Options {
  ExperimentConfig config;
  std::string task_name;
  std::string model_name = "nb";
  std::string epsilon_text;
  std::string bounds_text;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::string format = "json";
  std::optional<std::string> save_model;
  AuditRequest audit;
  std::string range_text;
  std::size_t samples = 1000000;
};

struct Output {
  std::string body;
  std::string extension;
};

double SingleEpsilon(const Options& o, Diagnostics& diagnostics) {
  if (o.epsilon_text.empty()) return 1.0;
  if (o.config.epsilons.size() > 1) {
    diagnostics.EmitCompatibility("Only the first epsilon is used by this task",
                                  {{"task", o.task_name}});
  }
  return o.config.epsilons.front();
}

std::optional<Bounds> ColumnBounds(const ExperimentConfig& config, std::size_t j) {
  if (!config.bounds.has_value()) return std::nullopt;
  return (*config.bounds)[j];
}

void CheckBoundsWidth(const ExperimentConfig& config, std::size_t d) {
  if (config.bounds.has_value() && config.bounds->size() != d) {
    throw DimensionError("--bounds lists " + std::to_string(config.bounds->size()) +
                         " intervals for " + std::to_string(d) + " features");
  }
}

double Accuracy(const std::vector<std::string>& predicted,
                const std::vector<std::string>& truth) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

json ModelJson(const models::ModelDocument& document, const std::optional<std::string>& path) {
  const std::string text = models::SerializeModel(document);
  if (path.has_value()) {
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw ParameterError("cannot write '" + *path + "'");
    file << text;
  }
  return json::parse(text);
}

Output RunStats(const Options& o, const Dataset& data, RandomSource& rng,
                Diagnostics& diagnostics) {
  const double epsilon = SingleEpsilon(o, diagnostics);
  const std::size_t d = data.features.cols();
  CheckBoundsWidth(o.config, d);
  // Mean and variance of every column each take an equal share.
  const std::vector<double> shares = SplitBudget(epsilon, 2 * d);
  json columns = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "column,mean,variance,std\n";
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<double> values = data.features.Column(j);
    const auto bounds = ColumnBounds(o.config, j);
    const double mean = tools::DpMean(values, {shares[2 * j], bounds}, rng, diagnostics);
    const double variance =
        tools::DpVar(values, {shares[2 * j + 1], bounds}, rng, diagnostics);
    const double std_dev = std::sqrt(variance);
    columns.push_back({{"name", data.feature_names[j]},
                       {"mean", mean},
                       {"variance", variance},
                       {"std", std_dev}});
    csv << data.feature_names[j] << ',' << mean << ',' << variance << ',' << std_dev << '\n';
  }
  if (o.format == "csv") return {csv.str(), "csv"};
  json out{{"task", "stats"},
           {"dataset", data.source},
           {"epsilon", epsilon},
           {"seed", rng.seed()},
           {"n", data.size()},
           {"columns", columns}};
  return {out.dump(2) + "\n", "json"};
}

Output RunHistogram(const Options& o, const Dataset& data, RandomSource& rng,
                    Diagnostics& diagnostics) {
  const double epsilon = SingleEpsilon(o, diagnostics);
  const std::size_t d = data.features.cols();
  CheckBoundsWidth(o.config, d);
  // Each column is its own histogram query.
  const std::vector<double> shares = SplitBudget(epsilon, d);
  json columns = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "column,bin,lower,upper,count\n";
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<double> values = data.features.Column(j);
    tools::AxisSpec axis;
    axis.bins = o.config.bins;
    axis.range = ColumnBounds(o.config, j);
    const auto result = tools::DpHistogram(values, axis, false, shares[j], rng, diagnostics);
    columns.push_back({{"name", data.feature_names[j]},
                       {"edges", result.edges.front()},
                       {"counts", result.values}});
    for (std::size_t b = 0; b < result.values.size(); ++b) {
      csv << data.feature_names[j] << ',' << b << ',' << result.edges.front()[b] << ','
          << result.edges.front()[b + 1] << ',' << result.values[b] << '\n';
    }
  }
  if (o.format == "csv") return {csv.str(), "csv"};
  json out{{"task", "histogram"},
           {"dataset", data.source},
           {"epsilon", epsilon},
           {"seed", rng.seed()},
           {"columns", columns}};
  return {out.dump(2) + "\n", "json"};
}

Output RunNaiveBayes(const Options& o, const Dataset& data, RandomSource& rng,
                     Diagnostics& diagnostics) {
  const double epsilon = SingleEpsilon(o, diagnostics);
  CheckBoundsWidth(o.config, data.features.cols());
  const auto [train, test] = SplitTrainTest(data, o.config.test_fraction, rng.seed());
  const auto model = models::FitGaussianNB(train.features, train.labels,
                                           {epsilon, o.config.bounds}, rng, diagnostics);
  const double accuracy = Accuracy(models::PredictGaussianNB(model, test.features), test.labels);
  const double baseline = Accuracy(
      models::PredictGaussianNB(models::FitGaussianNBNonPrivate(train.features, train.labels),
                                test.features),
      test.labels);
  json out{{"task", "nb"},
           {"dataset", data.source},
           {"epsilon", epsilon},
           {"seed", rng.seed()},
           {"train_size", train.size()},
           {"test_size", test.size()},
           {"accuracy", accuracy},
           {"baseline_accuracy", baseline},
           {"model", ModelJson({model, rng.seed(), diagnostics.records()}, o.save_model)}};
  return {out.dump(2) + "\n", "json"};
}

Output RunKMeans(const Options& o, const Dataset& data, RandomSource& rng,
                 Diagnostics& diagnostics) {
  const double epsilon = SingleEpsilon(o, diagnostics);
  CheckBoundsWidth(o.config, data.features.cols());
  models::KMeansOptions options;
  options.k = o.config.k;
  options.epsilon = epsilon;
  options.bounds = o.config.bounds;
  options.iterations = o.config.iterations;
  const auto model = models::FitKMeans(data.features, options, rng, diagnostics);
  const auto assignment = models::PredictKMeans(model, data.features);
  std::vector<std::size_t> sizes(model.centroids.size(), 0);
  double inertia = 0;
  for (std::size_t r = 0; r < assignment.size(); ++r) {
    ++sizes[assignment[r]];
    for (std::size_t j = 0; j < data.features.cols(); ++j) {
      const double diff = data.features(r, j) - model.centroids[assignment[r]][j];
      inertia += diff * diff;
    }
  }
  json out{{"task", "kmeans"},
           {"dataset", data.source},
           {"epsilon", epsilon},
           {"seed", rng.seed()},
           {"cluster_sizes", sizes},
           {"inertia", inertia},
           {"model", ModelJson({model, rng.seed(), diagnostics.records()}, o.save_model)}};
  return {out.dump(2) + "\n", "json"};
}

Output RunLogReg(const Options& o, const Dataset& raw, RandomSource& rng,
                 Diagnostics& diagnostics) {
  const double epsilon = SingleEpsilon(o, diagnostics);
  const Dataset data = PrepareLabels(o.config, raw);
  const auto [train, test] = SplitTrainTest(data, o.config.test_fraction, rng.seed());
  models::LogisticRegressionOptions options;
  options.epsilon = epsilon;
  options.data_norm = o.config.data_norm;
  options.lambda = o.config.lambda;
  const auto model =
      models::FitLogisticRegression(train.features, train.labels, options, rng, diagnostics);
  const double accuracy =
      Accuracy(models::PredictLogisticRegression(model, test.features), test.labels);
  const double baseline = Accuracy(
      models::PredictLogisticRegression(
          models::FitLogisticRegressionNonPrivate(train.features, train.labels, options),
          test.features),
      test.labels);
  json out{{"task", "logreg"},
           {"dataset", data.source},
           {"epsilon", epsilon},
           {"seed", rng.seed()},
           {"train_size", train.size()},
           {"test_size", test.size()},
           {"accuracy", accuracy},
           {"baseline_accuracy", baseline},
           {"optimizer", {{"iterations", model.trace.iterations},
                          {"gradient_norm", model.trace.gradient_norm},
                          {"converged", model.trace.converged}}},
           {"model", ModelJson({model, rng.seed(), diagnostics.records()}, o.save_model)}};
  return {out.dump(2) + "\n", "json"};
}

Output RunSweepTask(const Options& o, const Dataset& raw, Diagnostics& diagnostics) {
  const Dataset data = PrepareLabels(o.config, raw);
  const SweepResult result = RunSweep(o.config, data, diagnostics);
  if (o.format == "csv") return {SweepResultToCsv(result), "csv"};
  return {SweepResultToJson(result), "json"};
}

Output RunAudit(const Options& o, RandomSource& rng, Diagnostics& diagnostics) {
  AuditRequest request = o.audit;
  request.epsilon = SingleEpsilon(o, diagnostics);
  if (!o.range_text.empty()) {
    const auto bounds = ParseBoundsList(o.range_text);
    if (bounds.size() != 1) throw ParameterError("--range takes a single lo:hi interval");
    request.range_lower = bounds.front().lower();
    request.range_upper = bounds.front().upper();
  }
  const AuditCase c = MakeAuditCase(request);
  const auto report = audit::EstimatePrivacyLoss(c.sampler, c.x, c.x_prime, c.partition,
                                                 c.claimed, o.samples, rng);
  json out = json::parse(audit::AuditReportToJson(report));
  out["mechanism"] = c.mechanism;
  out["seed"] = rng.seed();
  return {out.dump(2) + "\n", "json"};
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("DPCORE_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError("DPCORE_SEED must be an unsigned integer");
    }
  }
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

int Execute(Options& o, std::ostream& out, std::ostream& err) {
  const auto task = ParseTask(o.task_name);
  if (!task.has_value()) throw ParameterError("unknown task '" + o.task_name + "'");
  o.config.task = *task;
  const auto model = ParseSweepModel(o.model_name);
  if (!model.has_value()) throw ParameterError("--model must be nb or logreg");
  o.config.model = *model;
  if (!o.epsilon_text.empty()) o.config.epsilons = ParseEpsilonList(o.epsilon_text);
  if (!o.bounds_text.empty()) o.config.bounds = ParseBoundsList(o.bounds_text);
  if (o.format != "json" && o.format != "csv") throw ParameterError("--format must be json or csv");
  const bool csv_capable =
      *task == Task::kStats || *task == Task::kHistogram || *task == Task::kSweep;
  if (o.format == "csv" && !csv_capable) {
    throw ParameterError("csv output is available for stats, histogram and sweep");
  }
  o.config.seed = ResolveSeed(o.seed);
  ValidateConfig(o.config);

  Diagnostics diagnostics;
  RandomSource rng(o.config.seed);
  Output result;
  if (*task == Task::kAudit) {
    result = RunAudit(o, rng, diagnostics);
  } else {
    const Dataset data = LoadConfiguredDataset(o.config);
    switch (*task) {
      case Task::kStats:
        result = RunStats(o, data, rng, diagnostics);
        break;
      case Task::kHistogram:
        result = RunHistogram(o, data, rng, diagnostics);
        break;
      case Task::kNaiveBayes:
        result = RunNaiveBayes(o, data, rng, diagnostics);
        break;
      case Task::kKMeans:
        result = RunKMeans(o, data, rng, diagnostics);
        break;
      case Task::kLogReg:
        result = RunLogReg(o, data, rng, diagnostics);
        break;
      case Task::kSweep:
        result = RunSweepTask(o, data, diagnostics);
        break;
      case Task::kAudit:
        break;
    }
  }

  for (const auto& d : diagnostics.records()) err << FormatDiagnostic(d) << '\n';
  if (o.out_path.has_value()) {
    std::ofstream file(*o.out_path, std::ios::binary);
    if (!file) throw ParameterError("cannot write '" + *o.out_path + "'");
    file << result.body;
  } else {
    out << result.body;
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential privacy experiments: statistics, models, sweeps and audits",
               "dpcore"};
  Options o;
  std::string label;
  std::size_t reps = o.config.repetitions;

  app.add_option("task", o.task_name,
                 "stats | histogram | nb | kmeans | logreg | sweep | audit")
      ->required();
  app.add_option("--data", o.config.data_path, "CSV dataset path");
  app.add_option("--builtin", o.config.builtin, "Builtin dataset name (iris)");
  app.add_option("--label", label, "Label column name or 0-based index (default: last)");
  app.add_option("--epsilon", o.epsilon_text, "Comma-separated epsilon values");
  app.add_option("--reps", reps, "Repetitions per epsilon (sweep)")->capture_default_str();
  app.add_option("--test-frac", o.config.test_fraction, "Test fraction")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed (default: $DPCORE_SEED, else random)");
  app.add_option("--bounds", o.bounds_text, "Per-feature bounds 'l1:u1,l2:u2,...'");
  app.add_option("--data-norm", o.config.data_norm, "Row norm bound for logreg");
  app.add_option("--k", o.config.k, "Number of clusters")->capture_default_str();
  app.add_option("--iters", o.config.iterations, "k-means iterations")->capture_default_str();
  app.add_option("--lambda", o.config.lambda, "logreg regularisation")->capture_default_str();
  app.add_option("--bins", o.config.bins, "Histogram bins")->capture_default_str();
  app.add_option("--positive-class", o.config.positive_class,
                 "logreg on multi-class data: this label versus the rest");
  app.add_option("--model", o.model_name, "Sweep model: nb | logreg")->capture_default_str();
  app.add_option("--save-model", o.save_model, "Write the fitted model JSON to this path");
  app.add_option("--out", o.out_path, "Output path (default: standard output)");
  app.add_option("--format", o.format, "json | csv")->capture_default_str();
  app.add_option("--mechanism", o.audit.mechanism, "Audit mechanism name");
  app.add_option("--delta", o.audit.delta, "Audit delta")->capture_default_str();
  app.add_option("--sensitivity", o.audit.sensitivity, "Audit sensitivity")
      ->capture_default_str();
  app.add_option("--samples", o.samples, "Audit samples per input")->capture_default_str();
  app.add_option("--cells", o.audit.cells, "Audit cells on --range")->capture_default_str();
  app.add_option("--range", o.range_text, "Audit partition range 'lo:hi'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  if (!label.empty()) o.config.label = label;
  o.config.repetitions = reps;
  try {
    return Execute(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const LabelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
}

}  // namespace dpcore::cli
