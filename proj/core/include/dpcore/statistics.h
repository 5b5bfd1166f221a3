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

#ifndef DPCORE_STATISTICS_H_
#define DPCORE_STATISTICS_H_

#include <optional>
#include <span>

#include "dpcore/bounds.h"
#include "dpcore/budget.h"
#include "dpcore/diagnostics.h"
#include "dpcore/random.h"

namespace dpcore::tools {

// The array length is treated as public. Values outside `bounds` are clamped
// before anything is computed; missing bounds are taken from the data with a
// PrivacyLeak diagnostic.
struct StatQuery {
  double epsilon = 1.0;
  std::optional<Bounds> bounds;
};

// Clamped mean plus Laplace noise with sensitivity (U - L) / n.
double DpMean(std::span<const double> values, const StatQuery& query,
              RandomSource& rng, Diagnostics& diagnostics,
              BudgetLedger* ledger = nullptr);

// Clamped population variance, randomised by bounded-domain Laplace on
// [0, (U - L)^2 / 4] with sensitivity (U - L)^2 / n (capped at the domain
// width). Requires n >= 2.
double DpVar(std::span<const double> values, const StatQuery& query,
             RandomSource& rng, Diagnostics& diagnostics,
             BudgetLedger* ledger = nullptr);

// Square root of one DpVar draw.
double DpStd(std::span<const double> values, const StatQuery& query,
             RandomSource& rng, Diagnostics& diagnostics,
             BudgetLedger* ledger = nullptr);

}  // namespace dpcore::tools

#endif  // DPCORE_STATISTICS_H_
