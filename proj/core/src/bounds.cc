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

#include "dpcore/bounds.h"

#include <algorithm>
#include <cmath>

#include "dpcore/errors.h"

namespace dpcore {

Bounds::Bounds(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw ParameterError("bounds must be finite");
  }
  if (lower > upper) {
    throw ParameterError("lower bound must not exceed upper bound");
  }
}

double Truncate(double value, const Bounds& bounds) {
  return std::min(std::max(value, bounds.lower()), bounds.upper());
}

double Fold(double value, const Bounds& bounds) {
  if (bounds.Contains(value)) return value;
  if (!(bounds.lower() < bounds.upper())) {
    throw ParameterError("folding requires lower < upper");
  }
  if (!std::isfinite(value)) {
    throw ParameterError("cannot fold a non-finite value");
  }
  const double lower = bounds.lower();
  const double upper = bounds.upper();

  // A few direct reflections cover the common case exactly; far-away values
  // are first reduced modulo the reflection period 2 * (upper - lower).
  for (int i = 0; i < 8; ++i) {
    if (value < lower) {
      value = 2 * lower - value;
    } else if (value > upper) {
      value = 2 * upper - value;
    } else {
      return value;
    }
  }
  const double width = upper - lower;
  double offset = std::fmod(value - lower, 2 * width);
  if (offset < 0) offset += 2 * width;
  if (offset > width) offset = 2 * width - offset;
  return Truncate(lower + offset, bounds);
}

Bounds BoundsOf(std::span<const double> values) {
  if (values.empty()) return Bounds(0, 0);
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  return Bounds(*min_it, *max_it);
}

}  // namespace dpcore
