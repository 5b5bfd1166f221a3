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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "dpcore/histogram.h"
#include "dpcore/kmeans.h"
#include "dpcore/logistic_regression.h"
#include "dpcore/naive_bayes.h"

namespace dpcore {
namespace {

struct Data {
  Matrix x;
  std::vector<std::string> y;
};

Data Blobs(std::size_t n, std::size_t d) {
  RandomSource rng(99);
  Data data;
  std::vector<double> row(d);
  for (std::size_t i = 0; i < n; ++i) {
    const bool second = i % 2 == 1;
    for (auto& v : row) v = (second ? 1.0 : -1.0) + 0.5 * rng.StandardNormal();
    data.x.AppendRow(row);
    data.y.push_back(second ? "b" : "a");
  }
  return data;
}

std::vector<Bounds> Box(std::size_t d) { return std::vector<Bounds>(d, Bounds(-4, 4)); }

void BM_Histogram(benchmark::State& state) {
  const Data data = Blobs(static_cast<std::size_t>(state.range(0)), 1);
  const std::vector<double> column = data.x.Column(0);
  tools::AxisSpec axis;
  axis.bins = 50;
  axis.range = Bounds(-4, 4);
  RandomSource rng(1);
  Diagnostics diagnostics;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tools::DpHistogram(column, axis, false, 1.0, rng, diagnostics));
  }
}
BENCHMARK(BM_Histogram)->Arg(1000)->Arg(100000);

void BM_NaiveBayesFit(benchmark::State& state) {
  const Data data = Blobs(static_cast<std::size_t>(state.range(0)), 4);
  RandomSource rng(2);
  Diagnostics diagnostics;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        models::FitGaussianNB(data.x, data.y, {1.0, Box(4)}, rng, diagnostics));
  }
}
BENCHMARK(BM_NaiveBayesFit)->Arg(1000)->Arg(100000);

void BM_KMeansFit(benchmark::State& state) {
  const Data data = Blobs(static_cast<std::size_t>(state.range(0)), 2);
  models::KMeansOptions options;
  options.k = 4;
  options.bounds = Box(2);
  RandomSource rng(3);
  Diagnostics diagnostics;
  for (auto _ : state) {
    benchmark::DoNotOptimize(models::FitKMeans(data.x, options, rng, diagnostics));
  }
}
BENCHMARK(BM_KMeansFit)->Arg(1000)->Arg(100000);

void BM_LogisticRegressionFit(benchmark::State& state) {
  const Data data = Blobs(static_cast<std::size_t>(state.range(0)), 4);
  models::LogisticRegressionOptions options;
  options.data_norm = 8;
  RandomSource rng(4);
  Diagnostics diagnostics;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        models::FitLogisticRegression(data.x, data.y, options, rng, diagnostics));
  }
}
BENCHMARK(BM_LogisticRegressionFit)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace dpcore
