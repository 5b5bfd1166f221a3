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

#ifndef DPCORE_MECHANISM_H_
#define DPCORE_MECHANISM_H_

#include <optional>

#include "dpcore/bounds.h"
#include "dpcore/privacy_params.h"

namespace dpcore {

// Calibration inputs shared by the real-valued mechanisms.
struct NumericMechanismConfig {
  PrivacyParams params;
  // L1 sensitivity, must be > 0.
  double sensitivity = 1.0;
  // Required by the truncated, folded and bounded-domain variants.
  std::optional<Bounds> bounds;
  // Staircase only; defaults to StaircaseDefaultGamma(epsilon).
  std::optional<double> gamma;
};

// Post-processing applied after noise is added.
enum class PostProcess { kNone, kTruncate, kFold };

}  // namespace dpcore

#endif  // DPCORE_MECHANISM_H_
