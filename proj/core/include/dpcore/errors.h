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

#ifndef DPCORE_ERRORS_H_
#define DPCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dpcore {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A privacy parameter, sensitivity, bound or hyperparameter is invalid.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A numerical calibration (root finding, bisection) could not be completed.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

// A structural input (hierarchy, utility table) is malformed.
class StructureError : public Error {
 public:
  using Error::Error;
};

// A histogram specification is malformed.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Feature dimensions of an input do not match a fitted model.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An audit partition does not cover an observed output.
class PartitionError : public Error {
 public:
  using Error::Error;
};

// Dataset text could not be parsed. Carries the 1-based row and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int row, int column)
      : Error(message + " (row " + std::to_string(row) + ", col " +
              std::to_string(column) + ")"),
        row_(row),
        column_(column) {}

  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

// The requested label column does not exist.
class LabelError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpcore

#endif  // DPCORE_ERRORS_H_
