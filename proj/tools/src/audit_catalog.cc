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

#include "dpcore/cli/audit_catalog.h"

#include <cmath>
#include <memory>

#include "dpcore/bounded_laplace.h"
#include "dpcore/binary.h"
#include "dpcore/errors.h"
#include "dpcore/exponential.h"
#include "dpcore/gaussian.h"
#include "dpcore/geometric.h"
#include "dpcore/laplace.h"
#include "dpcore/staircase.h"
#include "dpcore/vector_mechanism.h"

namespace dpcore::cli {

namespace {

constexpr char kHierarchy[] = R"([["a", "b"], ["c", ["d", "e"]]])";

// Default partitions stop where the remaining tail still holds roughly 1e-3
// of the mass (six Laplace scales, three Gaussian sigmas). Deeper cells see counts in the tens, where the plug-in
// binomial slack collapses and exact e^epsilon tails fail spuriously.
constexpr double kTailScales = 6.0;
constexpr double kTailSigmas = 3.0;

audit::OutputPartition Continuous(const AuditRequest& request, double lo, double hi) {
  if (request.range_lower.has_value() && request.range_upper.has_value()) {
    return audit::OutputPartition::Uniform(*request.range_lower, *request.range_upper,
                                           request.cells);
  }
  return audit::OutputPartition::Uniform(lo, hi, request.cells);
}

std::int64_t IntegerSensitivity(double sensitivity) {
  if (!(sensitivity >= 1) || sensitivity != std::floor(sensitivity)) {
    throw ParameterError("geometric mechanisms need a positive integer sensitivity");
  }
  return static_cast<std::int64_t>(sensitivity);
}

// Input labels are indices into `table.domain()`; so are the outputs.
audit::Sampler LabelSampler(std::shared_ptr<const Exponential> mechanism) {
  return [mechanism](double input, RandomSource& rng) {
    const auto& table = mechanism->table();
    const auto& label = table.domain()[static_cast<std::size_t>(input)];
    return static_cast<double>(table.IndexOf(mechanism->Randomise(label, rng)));
  };
}

}  // namespace

const std::vector<std::string>& AuditMechanisms() {
  static const std::vector<std::string> kNames = {
      "laplace",          "laplace-truncated",   "laplace-folded",
      "laplace-bounded-domain", "laplace-bounded-noise", "gaussian",
      "gaussian-analytic", "staircase",          "geometric",
      "geometric-truncated", "geometric-folded", "binary",
      "exponential",      "exponential-hierarchical", "uniform",
      "vector"};
  return kNames;
}

AuditCase MakeAuditCase(const AuditRequest& request) {
  const std::string& name = request.mechanism;
  const double sens = request.sensitivity;
  if (!(sens > 0) || !std::isfinite(sens)) {
    throw ParameterError("sensitivity must be positive and finite");
  }

  AuditCase c;
  c.mechanism = name;
  c.x = 0;
  c.x_prime = sens;

  if (name == "uniform") {
    c.claimed = PrivacyParams(0.0, request.delta);
    const UniformMechanism mechanism(request.delta, sens);
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    c.partition = Continuous(request, -mechanism.half_width(), sens + mechanism.half_width());
    return c;
  }

  c.claimed = PrivacyParams(request.epsilon, request.delta);
  const PrivacyParams& p = c.claimed;

  if (name == "laplace" || name == "laplace-truncated" || name == "laplace-folded") {
    const PostProcess post = name == "laplace"             ? PostProcess::kNone
                             : name == "laplace-truncated" ? PostProcess::kTruncate
                                                           : PostProcess::kFold;
    const Bounds bounds(-sens, 2 * sens);
    const Laplace mechanism(NumericMechanismConfig{p, sens, bounds, std::nullopt}, post);
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    c.partition = post == PostProcess::kNone
                      ? Continuous(request, -kTailScales * mechanism.scale(),
                                   sens + kTailScales * mechanism.scale())
                      : Continuous(request, bounds.lower(), bounds.upper());
  } else if (name == "laplace-bounded-domain") {
    const Bounds bounds(0.0, 3 * sens);
    const BoundedDomainLaplace mechanism(NumericMechanismConfig{p, sens, bounds, std::nullopt});
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    c.partition = Continuous(request, bounds.lower(), bounds.upper());
  } else if (name == "laplace-bounded-noise") {
    const BoundedNoiseLaplace mechanism(p, sens);
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    c.partition = Continuous(request, -mechanism.limit(), sens + mechanism.limit());
  } else if (name == "gaussian" || name == "gaussian-analytic") {
    const Gaussian mechanism(p, sens, name == "gaussian-analytic");
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    c.partition = Continuous(request, -kTailSigmas * mechanism.sigma(),
                                 sens + kTailSigmas * mechanism.sigma());
  } else if (name == "staircase") {
    const Staircase mechanism(NumericMechanismConfig{p, sens, std::nullopt, std::nullopt});
    c.sampler = [mechanism](double v, RandomSource& rng) { return mechanism.Randomise(v, rng); };
    const double reach = kTailScales / p.epsilon() * sens;
    c.partition = Continuous(request, -reach, sens + reach);
  } else if (name == "geometric" || name == "geometric-truncated" ||
             name == "geometric-folded") {
    const std::int64_t d = IntegerSensitivity(sens);
    const auto reach = static_cast<std::int64_t>(std::ceil(kTailScales / p.epsilon())) * d;
    const std::int64_t half = std::min<std::int64_t>(reach, (197 - d) / 2);
    if (name == "geometric") {
      const Geometric mechanism(GeometricConfig{p, d, std::nullopt}, PostProcess::kNone);
      c.sampler = [mechanism](double v, RandomSource& rng) {
        return static_cast<double>(mechanism.Randomise(v, rng));
      };
      c.partition = audit::OutputPartition::Integers(-half, d + half);
    } else {
      // The integer domain [-half, d + half] contains both inputs.
      const Geometric mechanism(
          GeometricConfig{p, d,
                          Bounds(static_cast<double>(-half), static_cast<double>(d + half))},
          name == "geometric-truncated" ? PostProcess::kTruncate : PostProcess::kFold);
      c.sampler = [mechanism](double v, RandomSource& rng) {
        return static_cast<double>(mechanism.Randomise(v, rng));
      };
      c.partition = audit::OutputPartition::Integers(-half, d + half);
    }
  } else if (name == "binary") {
    const Binary mechanism("0", "1", p);
    c.x_prime = 1;
    c.sampler = [mechanism](double v, RandomSource& rng) {
      return mechanism.Randomise(v == 0 ? "0" : "1", rng) == "0" ? 0.0 : 1.0;
    };
    c.partition = audit::OutputPartition::Integers(0, 1);
  } else if (name == "exponential") {
    std::vector<std::string> domain;
    std::vector<double> utility;
    for (int i = 0; i < 5; ++i) {
      domain.push_back(std::to_string(i));
      for (int j = 0; j < 5; ++j) utility.push_back(-std::abs(i - j));
    }
    c.x_prime = 1;
    c.sampler = LabelSampler(std::make_shared<const Exponential>(
        UtilityTable(std::move(domain), std::move(utility), 1.0), p));
    c.partition = audit::OutputPartition::Integers(0, 4);
  } else if (name == "exponential-hierarchical") {
    const Hierarchy hierarchy = ParseHierarchy(kHierarchy);
    const auto mechanism =
        std::make_shared<const Exponential>(HierarchyUtilities(hierarchy), p);
    c.x_prime = static_cast<double>(mechanism->table().size() - 1);
    c.sampler = LabelSampler(mechanism);
    c.partition = audit::OutputPartition::Integers(
        0, static_cast<std::int64_t>(mechanism->table().size()) - 1);
  } else if (name == "vector") {
    if (p.delta() != 0) throw ParameterError("the vector mechanism is pure DP");
    // Two per-sample gradients of norm at most 1 differ by at most 2.
    c.x_prime = 2;
    const double eps = p.epsilon();
    c.sampler = [eps](double v, RandomSource& rng) {
      return v + SampleVectorNoise(1, eps, rng)[0];
    };
    // One-dimensional noise is Laplace with scale 2 / eps.
    const double reach = 2 * kTailScales / eps;
    c.partition = Continuous(request, -reach, 2 + reach);
  } else {
    throw ParameterError("unknown mechanism '" + name + "'");
  }
  return c;
}

}  // namespace dpcore::cli
