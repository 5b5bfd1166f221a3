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

#ifndef DPCORE_CLI_EXPERIMENT_H_
#define DPCORE_CLI_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcore/bounds.h"
#include "dpcore/cli/dataset.h"
#include "dpcore/diagnostics.h"

namespace dpcore::cli {

enum class Task { kStats, kHistogram, kNaiveBayes, kKMeans, kLogReg, kSweep, kAudit };

std::optional<Task> ParseTask(std::string_view name);
std::string_view TaskName(Task task);

// Models a sweep can evaluate by test accuracy.
enum class SweepModel { kNaiveBayes, kLogReg };

std::optional<SweepModel> ParseSweepModel(std::string_view name);
std::string_view SweepModelName(SweepModel model);

inline const std::vector<double> kDefaultEpsilons = {0.01, 0.05, 0.1, 0.5, 1, 10, 100};

struct ExperimentConfig {
  std::optional<std::string> data_path;
  std::optional<std::string> builtin;
  LabelSelector label;
  Task task = Task::kSweep;
  SweepModel model = SweepModel::kNaiveBayes;
  std::vector<double> epsilons = kDefaultEpsilons;
  std::size_t repetitions = 30;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
  std::optional<std::vector<Bounds>> bounds;
  std::optional<double> data_norm;
  std::size_t k = 2;
  std::size_t iterations = 5;
  double lambda = 0.01;
  std::size_t bins = 10;
  // Logistic regression on multi-class data: this label versus the rest.
  std::optional<std::string> positive_class;
};

// Throws ParameterError when an invariant is violated.
void ValidateConfig(const ExperimentConfig& config);

Dataset LoadConfiguredDataset(const ExperimentConfig& config);

// "l1:u1,l2:u2,..."; throws ParameterError.
std::vector<Bounds> ParseBoundsList(std::string_view text);
// "0.01,0.1,1"; throws ParameterError.
std::vector<double> ParseEpsilonList(std::string_view text);

struct SweepPoint {
  double epsilon = 0;
  double mean_accuracy = 0;
  // Population standard deviation over repetitions.
  double std_accuracy = 0;
  std::vector<double> accuracies;

  bool operator==(const SweepPoint&) const = default;
};

struct SweepResult {
  int schema_version = 1;
  std::vector<SweepPoint> points;
  std::uint64_t seed = 0;
  std::string model;
  std::string dataset;
  std::size_t repetitions = 0;
  double test_fraction = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  // Accuracy of the noise-free model on the same split.
  double baseline_accuracy = 0;
  // Diagnostic counts summed over every repetition, keyed by kind name.
  std::map<std::string, std::size_t> diagnostic_counts;

  bool operator==(const SweepResult&) const = default;
};

// For each epsilon index i and repetition r, fits on the training split with
// RandomSource(DeriveSeed(seed, i, r)) and scores exact label matches on the
// test split. The split itself is drawn once from `seed`. Distinct
// diagnostics are appended to `diagnostics` once each.
SweepResult RunSweep(const ExperimentConfig& config, const Dataset& data,
                     Diagnostics& diagnostics);

// Binarises labels for logistic regression when positive_class is set.
Dataset PrepareLabels(const ExperimentConfig& config, Dataset data);

std::string SweepResultToJson(const SweepResult& result);
SweepResult SweepResultFromJson(std::string_view text);
// epsilon,mean_accuracy,std_accuracy,repetitions
std::string SweepResultToCsv(const SweepResult& result);

}  // namespace dpcore::cli

#endif  // DPCORE_CLI_EXPERIMENT_H_
