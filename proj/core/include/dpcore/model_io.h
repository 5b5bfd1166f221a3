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

#ifndef DPCORE_MODEL_IO_H_
#define DPCORE_MODEL_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dpcore/diagnostics.h"
#include "dpcore/kmeans.h"
#include "dpcore/logistic_regression.h"
#include "dpcore/naive_bayes.h"

namespace dpcore::models {

using AnyModel = std::variant<NBModel, KMeansModel, LogRegModel>;

struct ModelDocument {
  AnyModel model;
  std::optional<std::uint64_t> seed;
  std::vector<Diagnostic> diagnostics;
};

// "gaussian_nb", "kmeans" or "logistic_regression".
std::string_view ModelKind(const AnyModel& model);

// JSON text. Doubles are written in shortest round-trip form, so loading
// reproduces every parameter bit for bit. The optimizer trace is not stored.
std::string SerializeModel(const ModelDocument& document);

// Throws ParseError on malformed JSON or an unknown kind.
ModelDocument DeserializeModel(std::string_view text);

}  // namespace dpcore::models

#endif  // DPCORE_MODEL_IO_H_
