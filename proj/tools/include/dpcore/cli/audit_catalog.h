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

#ifndef DPCORE_CLI_AUDIT_CATALOG_H_
#define DPCORE_CLI_AUDIT_CATALOG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcore/audit.h"
#include "dpcore/privacy_params.h"

namespace dpcore::cli {

// A ready-to-run audit: a mechanism closure, a pair of adjacent inputs, the
// claimed guarantee and an output partition.
struct AuditCase {
  std::string mechanism;
  audit::Sampler sampler;
  double x = 0;
  double x_prime = 1;
  PrivacyParams claimed{1.0};
  audit::OutputPartition partition{std::vector<double>{0.0}};
};

struct AuditRequest {
  std::string mechanism;
  double epsilon = 1.0;
  double delta = 0.0;
  double sensitivity = 1.0;
  // Overrides the default partition of continuous-output mechanisms.
  std::optional<double> range_lower;
  std::optional<double> range_upper;
  std::size_t cells = 100;
};

// Names accepted by MakeAuditCase.
const std::vector<std::string>& AuditMechanisms();

// Inputs are 0 and the sensitivity unless stated otherwise:
//   laplace, laplace-truncated, laplace-folded ([-D, 2D]),
//   laplace-bounded-domain ([0, 3D]), laplace-bounded-noise, gaussian,
//   gaussian-analytic, staircase, geometric, geometric-truncated,
//   geometric-folded ([-5, 5]), binary (labels 0/1), exponential (5 ordered
//   labels, u = -|i - j|, inputs 0 and 1), exponential-hierarchical (leaves
//   a..e of [[a, b], [c, [d, e]]], inputs a and e), uniform (epsilon
//   ignored, claimed (0, delta)), vector (1-d noise law, inputs 0 and 2).
// Throws ParameterError for an unknown name or an invalid configuration.
AuditCase MakeAuditCase(const AuditRequest& request);

}  // namespace dpcore::cli

#endif  // DPCORE_CLI_AUDIT_CATALOG_H_
