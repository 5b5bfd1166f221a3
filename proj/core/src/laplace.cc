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

#include "dpcore/laplace.h"

#include <cmath>

#include "dpcore/errors.h"

namespace dpcore {

double LaplaceScale(const PrivacyParams& params, double sensitivity) {
  ValidatePrivacyParams(params,
                        {rules::EpsilonOrDeltaPositive(), rules::DeltaBelow(1)},
                        "Laplace");
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    throw ParameterError("sensitivity must be positive and finite");
  }
  const double denominator = params.epsilon() - std::log1p(-params.delta());
  if (!(denominator > 0)) {
    throw ParameterError("epsilon - ln(1 - delta) must be positive");
  }
  return sensitivity / denominator;
}

double SampleLaplace(double scale, RandomSource& rng) {
  const double centred = rng.UniformOpen() - 0.5;
  const double sign = centred < 0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(centred));
}

Laplace::Laplace(const NumericMechanismConfig& config, PostProcess post_process)
    : scale_(LaplaceScale(config.params, config.sensitivity)),
      post_process_(post_process),
      bounds_(config.bounds) {
  if (post_process_ != PostProcess::kNone && !bounds_.has_value()) {
    throw ParameterError("truncated and folded Laplace require bounds");
  }
  if (post_process_ == PostProcess::kFold && !(bounds_->width() > 0)) {
    throw ParameterError("folded Laplace requires lower < upper");
  }
}

double Laplace::Randomise(double value, RandomSource& rng) const {
  const double noisy = value + SampleLaplace(scale_, rng);
  switch (post_process_) {
    case PostProcess::kNone:
      return noisy;
    case PostProcess::kTruncate:
      return Truncate(noisy, *bounds_);
    case PostProcess::kFold:
      return Fold(noisy, *bounds_);
  }
  return noisy;
}

double LaplaceRandomise(double value, const NumericMechanismConfig& config,
                        PostProcess post_process, RandomSource& rng) {
  return Laplace(config, post_process).Randomise(value, rng);
}

}  // namespace dpcore
