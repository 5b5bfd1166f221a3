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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "dpcore/bounded_laplace.h"
#include "dpcore/exponential.h"
#include "dpcore/gaussian.h"
#include "dpcore/geometric.h"
#include "dpcore/laplace.h"
#include "dpcore/staircase.h"
#include "dpcore/vector_mechanism.h"

namespace dpcore {
namespace {

void BM_LaplaceRandomise(benchmark::State& state) {
  const Laplace mechanism({PrivacyParams(1), 1, std::nullopt, std::nullopt},
                          PostProcess::kNone);
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(0.0, rng));
}
BENCHMARK(BM_LaplaceRandomise);

void BM_LaplaceFolded(benchmark::State& state) {
  const Laplace mechanism({PrivacyParams(0.1), 1, Bounds(0, 1), std::nullopt},
                          PostProcess::kFold);
  RandomSource rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(0.5, rng));
}
BENCHMARK(BM_LaplaceFolded);

void BM_BoundedDomainRandomise(benchmark::State& state) {
  const BoundedDomainLaplace mechanism({PrivacyParams(1), 1, Bounds(0, 10), std::nullopt});
  RandomSource rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(5.0, rng));
}
BENCHMARK(BM_BoundedDomainRandomise);

void BM_BoundedLaplaceScale(benchmark::State& state) {
  const double width = static_cast<double>(state.range(0));
  const NumericMechanismConfig config{PrivacyParams(0.5), 1, Bounds(0, width), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(BoundedLaplaceScale(config));
}
BENCHMARK(BM_BoundedLaplaceScale)->Arg(2)->Arg(100)->Arg(1000000);

void BM_GaussianRandomise(benchmark::State& state) {
  const Gaussian mechanism(PrivacyParams(1, 1e-5), 1, true);
  RandomSource rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(0.0, rng));
}
BENCHMARK(BM_GaussianRandomise);

void BM_AnalyticGaussianCalibration(benchmark::State& state) {
  const PrivacyParams params(0.5, 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(AnalyticGaussianSigma(params, 1));
}
BENCHMARK(BM_AnalyticGaussianCalibration);

void BM_StaircaseRandomise(benchmark::State& state) {
  const Staircase mechanism({PrivacyParams(1), 1, std::nullopt, std::nullopt});
  RandomSource rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(0.0, rng));
}
BENCHMARK(BM_StaircaseRandomise);

void BM_GeometricRandomise(benchmark::State& state) {
  const Geometric mechanism({PrivacyParams(1), 1, std::nullopt}, PostProcess::kNone);
  RandomSource rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(std::int64_t{0}, rng));
}
BENCHMARK(BM_GeometricRandomise);

void BM_ExponentialRandomise(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> domain;
  std::vector<double> utility;
  for (std::size_t i = 0; i < size; ++i) {
    domain.push_back(std::to_string(i));
    for (std::size_t j = 0; j < size; ++j) {
      utility.push_back(-std::abs(static_cast<double>(i) - static_cast<double>(j)));
    }
  }
  const Exponential mechanism(UtilityTable(domain, utility, 1.0), PrivacyParams(1));
  RandomSource rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(mechanism.Randomise(domain[0], rng));
}
BENCHMARK(BM_ExponentialRandomise)->Arg(4)->Arg(64);

void BM_VectorNoise(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  RandomSource rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(SampleVectorNoise(d, 1.0, rng));
}
BENCHMARK(BM_VectorNoise)->Arg(4)->Arg(100);

}  // namespace
}  // namespace dpcore

BENCHMARK_MAIN();
