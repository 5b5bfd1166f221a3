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

#ifndef DPCORE_BINARY_H_
#define DPCORE_BINARY_H_

#include <string>

#include "dpcore/privacy_params.h"
#include "dpcore/random.h"

namespace dpcore {

// (e^epsilon + delta) / (e^epsilon + 1), stable for infinite epsilon.
double BinaryKeepProbability(const PrivacyParams& params);

// Randomised response over a two-label domain.
class Binary {
 public:
  Binary(std::string value0, std::string value1, const PrivacyParams& params);

  double keep_probability() const { return keep_probability_; }
  const std::string& value0() const { return value0_; }
  const std::string& value1() const { return value1_; }

  // Throws ParameterError if `value` is neither label.
  const std::string& Randomise(const std::string& value, RandomSource& rng) const;

 private:
  std::string value0_;
  std::string value1_;
  double keep_probability_;
};

std::string BinaryRandomise(const std::string& value, const std::string& value0,
                            const std::string& value1,
                            const PrivacyParams& params, RandomSource& rng);

}  // namespace dpcore

#endif  // DPCORE_BINARY_H_
