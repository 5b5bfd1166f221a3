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

#include "dpcore/binary.h"

#include <cmath>
#include <utility>

#include "dpcore/errors.h"

namespace dpcore {

double BinaryKeepProbability(const PrivacyParams& params) {
  const double damp = std::exp(-params.epsilon());
  return (1.0 + params.delta() * damp) / (1.0 + damp);
}

Binary::Binary(std::string value0, std::string value1,
               const PrivacyParams& params)
    : value0_(std::move(value0)),
      value1_(std::move(value1)),
      keep_probability_(BinaryKeepProbability(params)) {
  if (value0_ == value1_) {
    throw ParameterError("binary mechanism labels must differ");
  }
}

const std::string& Binary::Randomise(const std::string& value,
                                     RandomSource& rng) const {
  if (value != value0_ && value != value1_) {
    throw ParameterError("value '" + value + "' is not in the binary domain");
  }
  const bool keep = rng.Uniform() < keep_probability_;
  if (keep) return value == value0_ ? value0_ : value1_;
  return value == value0_ ? value1_ : value0_;
}

std::string BinaryRandomise(const std::string& value, const std::string& value0,
                            const std::string& value1,
                            const PrivacyParams& params, RandomSource& rng) {
  return Binary(value0, value1, params).Randomise(value, rng);
}

}  // namespace dpcore
