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

#ifndef DPCORE_BOUNDED_LAPLACE_H_
#define DPCORE_BOUNDED_LAPLACE_H_

#include "dpcore/mechanism.h"
#include "dpcore/random.h"

namespace dpcore {

// ---------------------------------------------------------------------------
// Bounded-domain Laplace: Laplace(value, b) conditioned on [lower, upper].
//
// Renormalising onto the domain makes the output density depend on how much
// mass the input loses at the edges, so the scale must exceed
// sensitivity / epsilon. With C(q, b) the mass of Laplace(q, b) inside the
// domain, the privacy loss of scale b is
//
//   sensitivity / b + ln max(C(l + sensitivity, b) / C(l, b),
//                            C(u - sensitivity, b) / C(u, b))
//
// and the calibrated scale is the smallest b whose loss does not exceed
// epsilon* = epsilon - ln(1 - delta).
// ---------------------------------------------------------------------------

// Mass of Laplace(centre, scale) inside `bounds`.
double LaplaceMassInside(double centre, double scale, const Bounds& bounds);

// Privacy loss of the bounded-domain mechanism at `scale`.
double BoundedDomainPrivacyLoss(double scale, double sensitivity,
                                const Bounds& bounds);

// Smallest scale in [sensitivity / epsilon*, 1e6 * sensitivity / epsilon*]
// meeting the target, found by bisection to relative width 1e-12. Throws
// CalibrationError if even the upper bracket end is insufficient.
double BoundedLaplaceScale(const NumericMechanismConfig& config);

class BoundedDomainLaplace {
 public:
  explicit BoundedDomainLaplace(const NumericMechanismConfig& config);

  double scale() const { return scale_; }
  const Bounds& bounds() const { return bounds_; }
  // Throws ParameterError when `value` lies outside the domain.
  double Randomise(double value, RandomSource& rng) const;

 private:
  Bounds bounds_;
  double scale_;
};

double BoundedLaplaceRandomise(double value, const NumericMechanismConfig& config,
                               RandomSource& rng);

// ---------------------------------------------------------------------------
// Bounded-noise Laplace: Laplace(0, sensitivity / epsilon) noise conditioned
// on |noise| <= B. At epsilon = 0 it degenerates to uniform noise on
// [-sensitivity / (2 delta), sensitivity / (2 delta)]. Requires delta in
// (0, 0.5).
// ---------------------------------------------------------------------------

// B = (sensitivity / epsilon) * ln(1 + (e^epsilon - 1) / (2 delta)), or
// sensitivity / (2 delta) when epsilon is zero.
double BoundedNoiseLimit(const PrivacyParams& params, double sensitivity);

class BoundedNoiseLaplace {
 public:
  BoundedNoiseLaplace(const PrivacyParams& params, double sensitivity);

  // Zero when the mechanism is in its uniform (epsilon = 0) regime.
  double scale() const { return scale_; }
  double limit() const { return limit_; }
  double Randomise(double value, RandomSource& rng) const;

 private:
  double scale_;
  double limit_;
};

double BoundedNoiseLaplaceRandomise(double value, const PrivacyParams& params,
                                    double sensitivity, RandomSource& rng);

// The (0, delta) uniform mechanism.
class UniformMechanism {
 public:
  UniformMechanism(double delta, double sensitivity);

  double half_width() const { return half_width_; }
  double Randomise(double value, RandomSource& rng) const;

 private:
  double half_width_;
};

}  // namespace dpcore

#endif  // DPCORE_BOUNDED_LAPLACE_H_
