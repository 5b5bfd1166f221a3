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

#ifndef DPCORE_STAIRCASE_H_
#define DPCORE_STAIRCASE_H_

#include "dpcore/mechanism.h"
#include "dpcore/random.h"

namespace dpcore {

// 1 / (1 + e^{epsilon / 2}).
double StaircaseDefaultGamma(double epsilon);

// Staircase mechanism. Noise density is a symmetric staircase with steps of
// width gamma * sensitivity and (1 - gamma) * sensitivity whose height drops
// by e^{-epsilon} every sensitivity units. Pure DP only.
class Staircase {
 public:
  explicit Staircase(const NumericMechanismConfig& config);

  double gamma() const { return gamma_; }
  double sensitivity() const { return sensitivity_; }
  double epsilon() const { return epsilon_; }
  double Randomise(double value, RandomSource& rng) const;

 private:
  double epsilon_;
  double sensitivity_;
  double gamma_;
  double decay_;           // rho = e^{-epsilon}
  double inner_step_prob_; // P(B = 0) = gamma / (gamma + (1 - gamma) rho)
};

double StaircaseRandomise(double value, const NumericMechanismConfig& config,
                          RandomSource& rng);

}  // namespace dpcore

#endif  // DPCORE_STAIRCASE_H_
