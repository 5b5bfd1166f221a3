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

#ifndef DPCORE_RANDOM_H_
#define DPCORE_RANDOM_H_

#include <cstdint>
#include <optional>
#include <random>

namespace dpcore {

// Stateless 64-bit mixer (splitmix64 finalizer).
std::uint64_t Mix64(std::uint64_t x);

// Derives an independent child seed from a parent seed and two indices.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0);

// Seedable pseudo-random stream.
//
// All draws come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard, and every real is built from the top 53 bits of one 64-bit
// word. Distribution objects from <random> are deliberately not used since
// their algorithms are implementation-defined. Not a cryptographic source.
class RandomSource {
 public:
  // Seeds from OS entropy when `seed` is empty.
  explicit RandomSource(std::optional<std::uint64_t> seed = std::nullopt);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53-bit resolution.
  double Uniform();
  // Uniform on (0, 1): the [0, 1) grid shifted by half a step.
  double UniformOpen();
  // Uniform integer in [0, n). Requires n > 0.
  std::uint64_t UniformIndex(std::uint64_t n);
  // Standard normal via Box-Muller from two uniforms (second variate dropped).
  double StandardNormal();
  // Exponential with mean 1 by inversion.
  double StandardExponential();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dpcore

#endif  // DPCORE_RANDOM_H_
