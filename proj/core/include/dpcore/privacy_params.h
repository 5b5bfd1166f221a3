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

#ifndef DPCORE_PRIVACY_PARAMS_H_
#define DPCORE_PRIVACY_PARAMS_H_

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace dpcore {

// An (epsilon, delta) privacy guarantee.
//
// The constructor enforces the rules shared by every mechanism: epsilon is
// non-negative, delta lies in [0, 1], and the two are not both zero.
// Mechanism-specific restrictions are expressed as PrivacyRule lists and
// checked with ValidatePrivacyParams() at calibration time.
class PrivacyParams {
 public:
  explicit PrivacyParams(double epsilon, double delta = 0.0);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

  friend bool operator==(const PrivacyParams&, const PrivacyParams&) = default;

 private:
  double epsilon_;
  double delta_;
};

// A named predicate over PrivacyParams. `description` is what a caller sees
// when the rule fails, e.g. "delta must lie in (0, 0.5)".
struct PrivacyRule {
  std::string description;
  std::function<bool(const PrivacyParams&)> holds;
};

namespace rules {

PrivacyRule EpsilonPositive();
PrivacyRule EpsilonAtMost(double max_epsilon);
PrivacyRule DeltaZero();
PrivacyRule DeltaPositive();
PrivacyRule DeltaBelow(double bound);
PrivacyRule DeltaInOpenInterval(double lower, double upper);
// epsilon > 0, or epsilon == 0 with delta > 0.
PrivacyRule EpsilonOrDeltaPositive();

}  // namespace rules

// Returns `params` unchanged if every rule holds. Otherwise throws
// ParameterError naming the first violated rule and `mechanism`.
const PrivacyParams& ValidatePrivacyParams(const PrivacyParams& params,
                                           std::span<const PrivacyRule> rules,
                                           std::string_view mechanism);

const PrivacyParams& ValidatePrivacyParams(
    const PrivacyParams& params, std::initializer_list<PrivacyRule> rules,
    std::string_view mechanism);

}  // namespace dpcore

#endif  // DPCORE_PRIVACY_PARAMS_H_
