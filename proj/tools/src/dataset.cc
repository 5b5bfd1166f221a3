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

#include "dpcore/cli/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "dpcore/errors.h"
#include "dpcore/random.h"

namespace dpcore::cli {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitCells(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> ParseNumber(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (*begin == '+') ++begin;
  double value = 0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<long> ParseIndex(const std::string& text) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

struct Line {
  int number;
  std::vector<std::string> cells;
};

}  // namespace

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::vector<std::string> Dataset::Classes() const {
  const std::set<std::string> unique(labels.begin(), labels.end());
  return {unique.begin(), unique.end()};
}

Dataset ParseDataset(std::string_view text, const LabelSelector& label,
                     std::string source) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto newline = text.find('\n', start);
    const auto raw = text.substr(start, newline == std::string_view::npos
                                            ? std::string_view::npos
                                            : newline - start);
    ++number;
    if (!Trim(raw).empty()) lines.push_back({number, SplitCells(raw)});
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  if (lines.empty()) throw ParseError("dataset is empty", 1, 1);

  const std::size_t width = lines.front().cells.size();
  if (width < 2) {
    throw ParseError("a dataset needs at least one feature and a label column",
                     lines.front().number, 1);
  }

  std::optional<long> index;
  std::optional<std::string> name;
  if (label.has_value()) {
    index = ParseIndex(*label);
    if (!index.has_value()) name = *label;
  }

  bool header = false;
  std::size_t label_column = width - 1;
  if (name.has_value()) {
    header = true;
    const auto& cells = lines.front().cells;
    const auto it = std::find(cells.begin(), cells.end(), *name);
    if (it == cells.end()) throw LabelError("label column '" + *name + "' not found");
    label_column = static_cast<std::size_t>(it - cells.begin());
  } else {
    if (index.has_value()) {
      const long w = static_cast<long>(width);
      const long resolved = *index < 0 ? w + *index : *index;
      if (resolved < 0 || resolved >= w) {
        throw LabelError("label column index " + std::to_string(*index) +
                         " is out of range for " + std::to_string(width) + " columns");
      }
      label_column = static_cast<std::size_t>(resolved);
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (c != label_column && !ParseNumber(lines.front().cells[c]).has_value()) {
        header = true;
      }
    }
  }

  Dataset data;
  data.source = std::move(source);
  if (header) {
    const auto& cells = lines.front().cells;
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_column) {
        data.label_name = cells[c];
      } else {
        data.feature_names.push_back(cells[c]);
      }
    }
  } else {
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_column) {
        data.label_name = "column " + std::to_string(c);
      } else {
        data.feature_names.push_back("column " + std::to_string(c));
      }
    }
  }

  std::vector<double> row(width - 1);
  for (std::size_t i = header ? 1 : 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.cells.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " cells, found " +
                           std::to_string(line.cells.size()),
                       line.number, static_cast<int>(std::min(width, line.cells.size()) + 1));
    }
    std::size_t j = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_column) continue;
      const auto value = ParseNumber(line.cells[c]);
      if (!value.has_value()) {
        throw ParseError("malformed numeric cell '" + line.cells[c] + "'", line.number,
                         static_cast<int>(c + 1));
      }
      row[j++] = *value;
    }
    data.features.AppendRow(row);
    data.labels.push_back(line.cells[label_column]);
  }
  if (data.labels.empty()) throw ParseError("dataset has no data rows", number, 1);
  return data;
}

Dataset LoadDatasetFile(const std::string& path, const LabelSelector& label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDataset(buffer.str(), label, path);
}

Dataset LoadBuiltin(std::string_view name, const LabelSelector& label) {
  if (name != "iris") {
    throw ParameterError("unknown builtin dataset '" + std::string(name) + "'");
  }
  if (Fnv1a(kIrisCsv) != kIrisFnv1a) throw ParseError("builtin iris data is corrupt", 0, 0);
  return ParseDataset(kIrisCsv, label, "builtin:iris");
}

std::pair<Dataset, Dataset> SplitTrainTest(const Dataset& data, double test_fraction,
                                           std::uint64_t seed) {
  if (!(test_fraction > 0 && test_fraction < 1)) {
    throw ParameterError("test fraction must lie in (0, 1)");
  }
  const std::size_t n = data.size();
  if (n < 2) throw ParameterError("need at least two rows to split");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  RandomSource rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.UniformIndex(i + 1)]);
  }

  // The small guard keeps 150 * (1 - 0.2) at 120 despite binary rounding.
  auto train_size = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * (1.0 - test_fraction) - 1e-9));
  train_size = std::clamp<std::size_t>(train_size, 1, n - 1);

  auto take = [&](std::size_t begin, std::size_t end) {
    Dataset part;
    part.feature_names = data.feature_names;
    part.label_name = data.label_name;
    part.source = data.source;
    for (std::size_t i = begin; i < end; ++i) {
      part.features.AppendRow(data.features.Row(order[i]));
      part.labels.push_back(data.labels[order[i]]);
    }
    return part;
  };
  return {take(0, train_size), take(train_size, n)};
}

}  // namespace dpcore::cli
