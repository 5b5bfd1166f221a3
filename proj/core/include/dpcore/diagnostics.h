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

#ifndef DPCORE_DIAGNOSTICS_H_
#define DPCORE_DIAGNOSTICS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpcore {

enum class DiagnosticKind {
  // A calibration input (bounds, norm, range) was derived from the data, so
  // the result does not strictly satisfy differential privacy.
  kPrivacyLeak,
  // A supplied parameter is not used and was ignored or amended.
  kCompatibility,
};

std::string_view DiagnosticKindName(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string message;
  std::vector<std::pair<std::string, std::string>> context;
};

// Per-call collector. Emitting never interrupts the computation.
class Diagnostics {
 public:
  void Emit(Diagnostic diagnostic);
  void EmitPrivacyLeak(std::string message,
                       std::vector<std::pair<std::string, std::string>> context = {});
  void EmitCompatibility(std::string message,
                         std::vector<std::pair<std::string, std::string>> context = {});

  const std::vector<Diagnostic>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::size_t Count(DiagnosticKind kind) const;
  void Clear() { records_.clear(); }

 private:
  std::vector<Diagnostic> records_;
};

// "WARN[PrivacyLeak] message (key=value, ...)".
std::string FormatDiagnostic(const Diagnostic& diagnostic);

}  // namespace dpcore

#endif  // DPCORE_DIAGNOSTICS_H_
