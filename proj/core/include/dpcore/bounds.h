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

#ifndef DPCORE_BOUNDS_H_
#define DPCORE_BOUNDS_H_

#include <span>
#include <vector>

namespace dpcore {

// A closed interval [lower, upper]. Both ends must be finite and ordered.
class Bounds {
 public:
  Bounds(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  double width() const { return upper_ - lower_; }
  bool Contains(double value) const {
    return value >= lower_ && value <= upper_;
  }

  friend bool operator==(const Bounds&, const Bounds&) = default;

 private:
  double lower_;
  double upper_;
};

// Clamps `value` into `bounds`.
double Truncate(double value, const Bounds& bounds);

// Reflects `value` across whichever boundary it violates until it lies in
// `bounds`. Values already inside (including the boundaries) are returned
// unchanged. Requires lower < upper and a finite value.
double Fold(double value, const Bounds& bounds);

// Smallest interval covering `values`. Empty input yields [0, 0].
Bounds BoundsOf(std::span<const double> values);

}  // namespace dpcore

#endif  // DPCORE_BOUNDS_H_
