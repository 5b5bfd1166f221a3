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

#include "dpcore/cli/experiment.h"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dpcore/errors.h"
#include "dpcore/logistic_regression.h"
#include "dpcore/naive_bayes.h"
#include "dpcore/random.h"

namespace dpcore::cli {

namespace {

using nlohmann::json;

constexpr std::pair<Task, std::string_view> kTaskNames[] = {
    {Task::kStats, "stats"},   {Task::kHistogram, "histogram"}, {Task::kNaiveBayes, "nb"},
    {Task::kKMeans, "kmeans"}, {Task::kLogReg, "logreg"},       {Task::kSweep, "sweep"},
    {Task::kAudit, "audit"},
};

double ParseDouble(std::string_view text, std::string_view what) {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  double value = 0;
  const char* begin = trimmed.data();
  const char* end = begin + trimmed.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (trimmed.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double Accuracy(const std::vector<std::string>& predicted,
                const std::vector<std::string>& truth) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

std::vector<std::string> FitAndPredict(const ExperimentConfig& config,
                                       const Dataset& train, const Dataset& test,
                                       std::optional<double> epsilon, RandomSource* rng,
                                       Diagnostics* diagnostics) {
  if (config.model == SweepModel::kNaiveBayes) {
    if (!epsilon.has_value()) {
      return models::PredictGaussianNB(
          models::FitGaussianNBNonPrivate(train.features, train.labels), test.features);
    }
    models::GaussianNBOptions options{*epsilon, config.bounds};
    return models::PredictGaussianNB(
        models::FitGaussianNB(train.features, train.labels, options, *rng, *diagnostics),
        test.features);
  }
  models::LogisticRegressionOptions options;
  options.data_norm = config.data_norm;
  options.lambda = config.lambda;
  if (!epsilon.has_value()) {
    return models::PredictLogisticRegression(
        models::FitLogisticRegressionNonPrivate(train.features, train.labels, options),
        test.features);
  }
  options.epsilon = *epsilon;
  return models::PredictLogisticRegression(
      models::FitLogisticRegression(train.features, train.labels, options, *rng,
                                    *diagnostics),
      test.features);
}

}  // namespace

std::optional<Task> ParseTask(std::string_view name) {
  for (const auto& [task, text] : kTaskNames) {
    if (text == name) return task;
  }
  return std::nullopt;
}

std::string_view TaskName(Task task) {
  for (const auto& [t, text] : kTaskNames) {
    if (t == task) return text;
  }
  return "unknown";
}

std::optional<SweepModel> ParseSweepModel(std::string_view name) {
  if (name == "nb") return SweepModel::kNaiveBayes;
  if (name == "logreg") return SweepModel::kLogReg;
  return std::nullopt;
}

std::string_view SweepModelName(SweepModel model) {
  return model == SweepModel::kNaiveBayes ? "nb" : "logreg";
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.data_path.has_value() == config.builtin.has_value() &&
      config.task != Task::kAudit) {
    throw ParameterError("exactly one of --data and --builtin is required");
  }
  if (config.repetitions < 1) throw ParameterError("repetitions must be >= 1");
  if (!(config.test_fraction > 0 && config.test_fraction < 1)) {
    throw ParameterError("test fraction must lie in (0, 1)");
  }
  if (config.epsilons.empty()) throw ParameterError("at least one epsilon is required");
  for (double e : config.epsilons) {
    if (!(e > 0) || !std::isfinite(e)) throw ParameterError("epsilon values must be > 0");
  }
  if (config.bins < 1) throw ParameterError("bins must be >= 1");
}

Dataset LoadConfiguredDataset(const ExperimentConfig& config) {
  if (config.builtin.has_value()) return LoadBuiltin(*config.builtin, config.label);
  return LoadDatasetFile(*config.data_path, config.label);
}

std::vector<Bounds> ParseBoundsList(std::string_view text) {
  std::vector<Bounds> out;
  for (const auto part : SplitOn(text, ',')) {
    const auto ends = SplitOn(part, ':');
    if (ends.size() != 2) {
      throw ParameterError("bounds must look like 'l1:u1,l2:u2', got '" + std::string(part) +
                           "'");
    }
    out.emplace_back(ParseDouble(ends[0], "lower bound"), ParseDouble(ends[1], "upper bound"));
  }
  return out;
}

std::vector<double> ParseEpsilonList(std::string_view text) {
  std::vector<double> out;
  for (const auto part : SplitOn(text, ',')) out.push_back(ParseDouble(part, "epsilon"));
  return out;
}

Dataset PrepareLabels(const ExperimentConfig& config, Dataset data) {
  if (!config.positive_class.has_value()) return data;
  const std::string& positive = *config.positive_class;
  bool seen = false;
  for (auto& label : data.labels) {
    if (label == positive) {
      seen = true;
    } else {
      label = "not " + positive;
    }
  }
  if (!seen) throw LabelError("positive class '" + positive + "' does not occur");
  return data;
}

SweepResult RunSweep(const ExperimentConfig& config, const Dataset& data,
                     Diagnostics& diagnostics) {
  ValidateConfig(config);
  const auto [train, test] = SplitTrainTest(data, config.test_fraction, config.seed);

  SweepResult result;
  result.seed = config.seed;
  result.model = std::string(SweepModelName(config.model));
  result.dataset = data.source;
  result.repetitions = config.repetitions;
  result.test_fraction = config.test_fraction;
  result.train_size = train.size();
  result.test_size = test.size();
  result.baseline_accuracy =
      Accuracy(FitAndPredict(config, train, test, std::nullopt, nullptr, nullptr),
               test.labels);
  result.diagnostic_counts = {
      {std::string(DiagnosticKindName(DiagnosticKind::kPrivacyLeak)), 0},
      {std::string(DiagnosticKindName(DiagnosticKind::kCompatibility)), 0}};

  std::set<std::string> reported;
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    SweepPoint point;
    point.epsilon = config.epsilons[i];
    for (std::size_t r = 0; r < config.repetitions; ++r) {
      RandomSource rng(DeriveSeed(config.seed, i, r));
      Diagnostics local;
      std::vector<std::string> predicted;
      try {
        predicted = FitAndPredict(config, train, test, point.epsilon, &rng, &local);
      } catch (const Error& e) {
        std::ostringstream where;
        where << e.what() << " [epsilon=" << point.epsilon << ", repetition=" << r << "]";
        throw ParameterError(where.str());
      }
      point.accuracies.push_back(Accuracy(predicted, test.labels));
      for (const auto& d : local.records()) {
        ++result.diagnostic_counts[std::string(DiagnosticKindName(d.kind))];
        if (reported.insert(FormatDiagnostic(d)).second) diagnostics.Emit(d);
      }
    }
    double sum = 0;
    for (double a : point.accuracies) sum += a;
    const double n = static_cast<double>(point.accuracies.size());
    point.mean_accuracy = sum / n;
    double squares = 0;
    for (double a : point.accuracies) {
      squares += (a - point.mean_accuracy) * (a - point.mean_accuracy);
    }
    point.std_accuracy = std::sqrt(squares / n);
    result.points.push_back(std::move(point));
  }
  return result;
}

std::string SweepResultToJson(const SweepResult& result) {
  json points = json::array();
  for (const auto& p : result.points) {
    points.push_back({{"epsilon", p.epsilon},
                      {"mean_accuracy", p.mean_accuracy},
                      {"std_accuracy", p.std_accuracy},
                      {"accuracies", p.accuracies}});
  }
  json out;
  out["schema_version"] = result.schema_version;
  out["points"] = points;
  out["metadata"] = {{"seed", result.seed},
                     {"model", result.model},
                     {"dataset", result.dataset},
                     {"repetitions", result.repetitions},
                     {"test_fraction", result.test_fraction},
                     {"train_size", result.train_size},
                     {"test_size", result.test_size},
                     {"baseline_accuracy", result.baseline_accuracy},
                     {"diagnostics", result.diagnostic_counts}};
  return out.dump(2) + "\n";
}

SweepResult SweepResultFromJson(std::string_view text) {
  try {
    const json j = json::parse(text);
    SweepResult result;
    j.at("schema_version").get_to(result.schema_version);
    if (result.schema_version != 1) throw ParseError("unsupported schema_version", 0, 0);
    for (const auto& p : j.at("points")) {
      SweepPoint point;
      p.at("epsilon").get_to(point.epsilon);
      p.at("mean_accuracy").get_to(point.mean_accuracy);
      p.at("std_accuracy").get_to(point.std_accuracy);
      p.at("accuracies").get_to(point.accuracies);
      result.points.push_back(std::move(point));
    }
    const json& meta = j.at("metadata");
    meta.at("seed").get_to(result.seed);
    meta.at("model").get_to(result.model);
    meta.at("dataset").get_to(result.dataset);
    meta.at("repetitions").get_to(result.repetitions);
    meta.at("test_fraction").get_to(result.test_fraction);
    meta.at("train_size").get_to(result.train_size);
    meta.at("test_size").get_to(result.test_size);
    meta.at("baseline_accuracy").get_to(result.baseline_accuracy);
    meta.at("diagnostics").get_to(result.diagnostic_counts);
    return result;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sweep result: ") + e.what(), 0, 0);
  }
}

std::string SweepResultToCsv(const SweepResult& result) {
  std::ostringstream out;
  out.precision(17);
  out << "epsilon,mean_accuracy,std_accuracy,repetitions\n";
  for (const auto& p : result.points) {
    out << p.epsilon << ',' << p.mean_accuracy << ',' << p.std_accuracy << ','
        << p.accuracies.size() << '\n';
  }
  return out.str();
}

}  // namespace dpcore::cli
