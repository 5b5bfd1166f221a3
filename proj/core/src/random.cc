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

#include "dpcore/random.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "dpcore/errors.h"

namespace dpcore {

namespace {

constexpr double kInv2Pow53 = 1.0 / 9007199254740992.0;

std::uint64_t EntropySeed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

}  // namespace

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return Mix64(Mix64(Mix64(seed) ^ a) ^ (b * 0x9e3779b97f4a7c15ULL));
}

RandomSource::RandomSource(std::optional<std::uint64_t> seed)
    : seed_(seed.has_value() ? *seed : EntropySeed()), engine_(seed_) {}

double RandomSource::Uniform() {
  return static_cast<double>(engine_() >> 11) * kInv2Pow53;
}

double RandomSource::UniformOpen() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * kInv2Pow53;
}

std::uint64_t RandomSource::UniformIndex(std::uint64_t n) {
  if (n == 0) throw ParameterError("UniformIndex requires n > 0");
  // Rejection on the top of the range removes modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

double RandomSource::StandardNormal() {
  const double u1 = UniformOpen();
  const double u2 = Uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RandomSource::StandardExponential() { return -std::log(UniformOpen()); }

}  // namespace dpcore
