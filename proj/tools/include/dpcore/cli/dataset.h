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

#ifndef DPCORE_CLI_DATASET_H_
#define DPCORE_CLI_DATASET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpcore/matrix.h"

namespace dpcore::cli {

extern const std::string_view kIrisCsv;
// FNV-1a (64-bit) of kIrisCsv.
extern const std::uint64_t kIrisFnv1a;

std::uint64_t Fnv1a(std::string_view bytes);

struct Dataset {
  Matrix features;
  std::vector<std::string> labels;
  std::vector<std::string> feature_names;
  std::string label_name;
  std::string source;

  std::size_t size() const { return labels.size(); }
  std::vector<std::string> Classes() const;
};

// Label column selector: a header name, or a 0-based column index (negative
// values count from the end). Defaults to the last column.
using LabelSelector = std::optional<std::string>;

// Parses comma-separated text. The first row is a header when any of its
// feature cells is not a number, or whenever the label is selected by name.
// Blank lines are skipped. Throws ParseError (1-based line and column) for
// a non-numeric or non-finite feature cell or a ragged row, and LabelError
// when the label column does not exist.
Dataset ParseDataset(std::string_view text, const LabelSelector& label,
                     std::string source = "<memory>");

Dataset LoadDatasetFile(const std::string& path, const LabelSelector& label);

// Only "iris" is shipped.
Dataset LoadBuiltin(std::string_view name, const LabelSelector& label = std::nullopt);

// Seeded uniform shuffle; the first ceil(n (1 - test_fraction)) shuffled
// rows form the training set. Requires test_fraction in (0, 1).
std::pair<Dataset, Dataset> SplitTrainTest(const Dataset& data, double test_fraction,
                                           std::uint64_t seed);

}  // namespace dpcore::cli

#endif  // DPCORE_CLI_DATASET_H_
