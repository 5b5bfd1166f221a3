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

#include "dpcore/privacy_params.h"

#include <cmath>
#include <sstream>

#include "dpcore/errors.h"

namespace dpcore {

namespace {

std::string FormatNumber(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

PrivacyParams::PrivacyParams(double epsilon, double delta)
    : epsilon_(epsilon), delta_(delta) {
  if (std::isnan(epsilon) || epsilon < 0) {
    throw ParameterError("epsilon must be non-negative");
  }
  if (std::isnan(delta) || delta < 0 || delta > 1) {
    throw ParameterError("delta must lie in [0, 1]");
  }
  if (epsilon == 0 && delta == 0) {
    throw ParameterError("epsilon and delta cannot both be zero");
  }
}

namespace rules {

PrivacyRule EpsilonPositive() {
  return {"epsilon must be strictly positive",
          [](const PrivacyParams& p) { return p.epsilon() > 0; }};
}

PrivacyRule EpsilonAtMost(double max_epsilon) {
  return {"epsilon must not exceed " + FormatNumber(max_epsilon),
          [max_epsilon](const PrivacyParams& p) {
            return p.epsilon() <= max_epsilon;
          }};
}

PrivacyRule DeltaZero() {
  return {"delta must be zero",
          [](const PrivacyParams& p) { return p.delta() == 0; }};
}

PrivacyRule DeltaPositive() {
  return {"delta must be strictly positive",
          [](const PrivacyParams& p) { return p.delta() > 0; }};
}

PrivacyRule DeltaBelow(double bound) {
  return {"delta must be less than " + FormatNumber(bound),
          [bound](const PrivacyParams& p) { return p.delta() < bound; }};
}

PrivacyRule DeltaInOpenInterval(double lower, double upper) {
  return {"delta must lie in (" + FormatNumber(lower) + ", " +
              FormatNumber(upper) + ")",
          [lower, upper](const PrivacyParams& p) {
            return p.delta() > lower && p.delta() < upper;
          }};
}

PrivacyRule EpsilonOrDeltaPositive() {
  return {"epsilon must be positive unless delta is positive",
          [](const PrivacyParams& p) {
            return p.epsilon() > 0 || p.delta() > 0;
          }};
}

}  // namespace rules

const PrivacyParams& ValidatePrivacyParams(const PrivacyParams& params,
                                           std::span<const PrivacyRule> rules,
                                           std::string_view mechanism) {
  for (const PrivacyRule& rule : rules) {
    if (!rule.holds(params)) {
      throw ParameterError(rule.description + " for " + std::string(mechanism));
    }
  }
  return params;
}

const PrivacyParams& ValidatePrivacyParams(
    const PrivacyParams& params, std::initializer_list<PrivacyRule> rules,
    std::string_view mechanism) {
  return ValidatePrivacyParams(
      params, std::span<const PrivacyRule>(rules.begin(), rules.size()),
      mechanism);
}

}  // namespace dpcore
