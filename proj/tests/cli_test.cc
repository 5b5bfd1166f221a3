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

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dpcore/cli/app.h"
#include "dpcore/cli/audit_catalog.h"
#include "dpcore/cli/dataset.h"
#include "dpcore/cli/experiment.h"
#include "dpcore/errors.h"
#include "json.hpp"
#include "test_util.h"

namespace dpcore::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Reference 64-bit FNV-1a, written out from the published constants.
std::uint64_t ReferenceFnv(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "dpcore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Dataset, BuiltinIris) {
  const Dataset iris = LoadBuiltin("iris");
  EXPECT_EQ(iris.size(), 150u);
  EXPECT_EQ(iris.features.cols(), 4u);
  std::map<std::string, int> counts;
  for (const auto& label : iris.labels) ++counts[label];
  EXPECT_EQ(counts, (std::map<std::string, int>{{"setosa", 50}, {"versicolor", 50},
                                                {"virginica", 50}}));
  EXPECT_EQ(iris.Classes(), (std::vector<std::string>{"setosa", "versicolor", "virginica"}));
  EXPECT_EQ(iris.label_name, "species");

  const std::string file = ReadFile(testing::SourcePath("data/iris.csv"));
  EXPECT_EQ(std::string(kIrisCsv), file);
  EXPECT_EQ(ReferenceFnv(file), kIrisFnv1a);
  EXPECT_EQ(Fnv1a(file), kIrisFnv1a);
  EXPECT_THROW(LoadBuiltin("wine"), ParameterError);
}

TEST(Dataset, ParsesHeaderAndLabel) {
  const Dataset d = ParseDataset("a,b,label\n1,2,x\n3,4.5,y\n", std::nullopt);
  EXPECT_EQ(d.features.rows(), 2u);
  EXPECT_EQ(d.features.cols(), 2u);
  EXPECT_EQ(d.features(1, 1), 4.5);
  EXPECT_EQ(d.labels, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"a", "b"}));

  const Dataset by_name = ParseDataset("label,a\nx,1\ny,2\n", std::string("label"));
  EXPECT_EQ(by_name.labels, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(by_name.features(1, 0), 2);

  const Dataset by_index = ParseDataset("7,1\n8,2\n", std::string("0"));
  EXPECT_EQ(by_index.labels, (std::vector<std::string>{"7", "8"}));
  EXPECT_EQ(by_index.features(0, 0), 1);
}

TEST(Dataset, MalformedCellReportsPosition) {
  std::string text = "a,b,label\n";
  for (int i = 0; i < 5; ++i) text += "1,2,x\n";
  text += "1,oops,x\n";  // line 7, column 2
  try {
    ParseDataset(text, std::nullopt);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 7);
    EXPECT_EQ(e.column(), 2);
  }
  EXPECT_THROW(ParseDataset("", std::nullopt), ParseError);
  EXPECT_THROW(ParseDataset("1,2,x\n1,x\n", std::nullopt), ParseError);
  EXPECT_THROW(ParseDataset("a,b\n1,x\n", std::string("missing")), LabelError);
  EXPECT_THROW(ParseDataset("1,x\n", std::string("5")), LabelError);
}

TEST(Dataset, SplitSizesAndDeterminism) {
  const Dataset iris = LoadBuiltin("iris");
  const auto [train, test] = SplitTrainTest(iris, 0.2, 3);
  EXPECT_EQ(train.size(), 120u);
  EXPECT_EQ(test.size(), 30u);
  const auto [train2, test2] = SplitTrainTest(iris, 0.2, 3);
  EXPECT_EQ(train.labels, train2.labels);
  EXPECT_EQ(test.labels, test2.labels);

  // Every row lands in exactly one side.
  std::multiset<std::vector<double>> seen;
  for (std::size_t r = 0; r < train.size(); ++r) {
    const auto row = train.features.Row(r);
    seen.emplace(row.begin(), row.end());
  }
  for (std::size_t r = 0; r < test.size(); ++r) {
    const auto row = test.features.Row(r);
    seen.emplace(row.begin(), row.end());
  }
  std::multiset<std::vector<double>> all;
  for (std::size_t r = 0; r < iris.size(); ++r) {
    const auto row = iris.features.Row(r);
    all.emplace(row.begin(), row.end());
  }
  EXPECT_EQ(seen, all);

  const Dataset three = ParseDataset("1,a\n2,b\n3,c\n", std::nullopt);
  const auto [a, b] = SplitTrainTest(three, 0.5, 1);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_THROW(SplitTrainTest(three, 1.0, 1), ParameterError);
}

TEST(Experiment, ParseLists) {
  const auto bounds = ParseBoundsList("4:8,-2:4.5");
  ASSERT_EQ(bounds.size(), 2u);
  EXPECT_EQ(bounds[1].lower(), -2);
  EXPECT_EQ(bounds[1].upper(), 4.5);
  EXPECT_THROW(ParseBoundsList("1-2"), ParameterError);
  EXPECT_THROW(ParseBoundsList("3:1"), ParameterError);
  EXPECT_EQ(ParseEpsilonList("0.1,1,1e5"), (std::vector<double>{0.1, 1, 1e5}));
  EXPECT_THROW(ParseEpsilonList("x"), ParameterError);
  EXPECT_EQ(ParseTask("nb"), Task::kNaiveBayes);
  EXPECT_FALSE(ParseTask("forest").has_value());
  EXPECT_EQ(ParseSweepModel("logreg"), SweepModel::kLogReg);
}

ExperimentConfig IrisConfig() {
  ExperimentConfig config;
  config.builtin = "iris";
  config.seed = 5;
  config.bounds = std::vector<Bounds>{{4, 8}, {2, 4.5}, {1, 7}, {0, 2.5}};
  return config;
}

TEST(Sweep, SingleRepetitionHasZeroSpread) {
  ExperimentConfig config = IrisConfig();
  config.epsilons = {1};
  config.repetitions = 1;
  Diagnostics diagnostics;
  const SweepResult result = RunSweep(config, LoadBuiltin("iris"), diagnostics);
  ASSERT_EQ(result.points.size(), 1u);
  EXPECT_EQ(result.points[0].std_accuracy, 0);
  EXPECT_EQ(result.points[0].accuracies.size(), 1u);
  EXPECT_EQ(result.train_size, 120u);
  EXPECT_EQ(result.test_size, 30u);
}

TEST(Sweep, JsonRoundTripAndCsv) {
  ExperimentConfig config = IrisConfig();
  config.epsilons = {0.5, 10};
  config.repetitions = 4;
  Diagnostics diagnostics;
  const SweepResult result = RunSweep(config, LoadBuiltin("iris"), diagnostics);
  const std::string text = SweepResultToJson(result);
  EXPECT_EQ(SweepResultFromJson(text), result);
  EXPECT_THROW(SweepResultFromJson("{}"), ParseError);

  for (const auto& p : result.points) {
    double mean = 0;
    for (double a : p.accuracies) mean += a / 4;
    double var = 0;
    for (double a : p.accuracies) var += (a - mean) * (a - mean) / 4;
    EXPECT_NEAR(p.mean_accuracy, mean, 1e-15);
    EXPECT_NEAR(p.std_accuracy, std::sqrt(var), 1e-15);
  }

  const std::string csv = SweepResultToCsv(result);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "epsilon,mean_accuracy,std_accuracy,repetitions");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST(Sweep, HugeEpsilonTracksBaseline) {
  ExperimentConfig config = IrisConfig();
  config.epsilons = {1e5};
  config.repetitions = 10;
  Diagnostics diagnostics;
  const SweepResult result = RunSweep(config, LoadBuiltin("iris"), diagnostics);
  EXPECT_NEAR(result.points[0].mean_accuracy, result.baseline_accuracy, 0.02);
  EXPECT_TRUE(diagnostics.empty());
}

TEST(Sweep, PositiveClassRelabels) {
  ExperimentConfig config;
  config.positive_class = "setosa";
  const Dataset data = PrepareLabels(config, LoadBuiltin("iris"));
  EXPECT_EQ(data.Classes(), (std::vector<std::string>{"not setosa", "setosa"}));
  config.positive_class = "tulip";
  EXPECT_THROW(PrepareLabels(config, LoadBuiltin("iris")), LabelError);
}

TEST(RunCli, ExitCodes) {
  const CliRun ok = RunTool({"stats", "--builtin", "iris", "--epsilon", "1", "--seed", "1",
                         "--bounds", "4:8,2:4.5,1:7,0:2.5"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  const auto parsed = nlohmann::json::parse(ok.out);
  EXPECT_EQ(parsed.at("columns").size(), 4u);
  EXPECT_TRUE(ok.err.empty());

  const CliRun leak = RunTool({"stats", "--builtin", "iris", "--epsilon", "1", "--seed", "1"});
  EXPECT_EQ(leak.code, kExitOk);
  EXPECT_NE(leak.err.find("Bounds have not been specified"), std::string::npos);

  EXPECT_EQ(RunTool({"stats", "--builtin", "iris", "--epsilon", "0", "--seed", "1"}).code,
            kExitParameter);
  EXPECT_EQ(RunTool({"forest", "--builtin", "iris"}).code, kExitParameter);
  EXPECT_EQ(RunTool({"sweep", "--builtin", "iris", "--bounds", "1:2"}).code, kExitParameter);
  EXPECT_EQ(RunTool({"sweep", "--data", "/nonexistent/data.csv", "--seed", "1"}).code, kExitData);
  EXPECT_EQ(RunTool({"nb", "--builtin", "iris", "--label", "nope", "--seed", "1"}).code, kExitData);
  EXPECT_EQ(RunTool({"--help"}).code, kExitOk);
}

TEST(RunCli, SeededOutputIsReproducible) {
  const std::vector<std::string> args = {"sweep", "--builtin", "iris", "--epsilon", "0.5,5",
                                         "--reps", "3", "--seed", "42",
                                         "--bounds", "4:8,2:4.5,1:7,0:2.5"};
  const CliRun a = RunTool(args);
  const CliRun b = RunTool(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(SweepResultFromJson(a.out).seed, 42u);
}

TEST(AuditCatalog, EveryMechanismBuilds) {
  EXPECT_EQ(AuditMechanisms().size(), 16u);
  for (const auto& name : AuditMechanisms()) {
    AuditRequest request;
    request.mechanism = name;
    if (name.find("gaussian") != std::string::npos || name.find("bounded-noise") != std::string::npos ||
        name == "uniform") {
      request.delta = 0.1;
    }
    EXPECT_NO_THROW(MakeAuditCase(request)) << name;
  }
  AuditRequest unknown;
  unknown.mechanism = "nope";
  EXPECT_THROW(MakeAuditCase(unknown), ParameterError);
}

}  // namespace
}  // namespace dpcore::cli
