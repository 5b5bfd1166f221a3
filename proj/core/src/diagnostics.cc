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

#include "dpcore/diagnostics.h"

#include <algorithm>

namespace dpcore {

std::string_view DiagnosticKindName(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kPrivacyLeak:
      return "PrivacyLeak";
    case DiagnosticKind::kCompatibility:
      return "Compat";
  }
  return "Unknown";
}

void Diagnostics::Emit(Diagnostic diagnostic) {
  records_.push_back(std::move(diagnostic));
}

void Diagnostics::EmitPrivacyLeak(
    std::string message,
    std::vector<std::pair<std::string, std::string>> context) {
  Emit({DiagnosticKind::kPrivacyLeak, std::move(message), std::move(context)});
}

void Diagnostics::EmitCompatibility(
    std::string message,
    std::vector<std::pair<std::string, std::string>> context) {
  Emit({DiagnosticKind::kCompatibility, std::move(message),
        std::move(context)});
}

std::size_t Diagnostics::Count(DiagnosticKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [kind](const Diagnostic& d) { return d.kind == kind; }));
}

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  std::string line = "WARN[";
  line += DiagnosticKindName(diagnostic.kind);
  line += "] ";
  line += diagnostic.message;
  if (!diagnostic.context.empty()) {
    line += " (";
    for (std::size_t i = 0; i < diagnostic.context.size(); ++i) {
      if (i > 0) line += ", ";
      line += diagnostic.context[i].first + "=" + diagnostic.context[i].second;
    }
    line += ")";
  }
  return line;
}

}  // namespace dpcore
