// Copyright 2026 The ordinalscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordinalscan {

/// Structural misuse: delay out of range, invalid order, malformed plan.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data too degenerate to evaluate (all pairs excluded, empty histogram).
/// Distinct from DomainError so callers can mask a dead window instead of
/// rejecting the request.
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure: unopenable, unwritable, or unmovable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-level ingestion failure; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line_number = 0)
      : std::runtime_error(line_number > 0
                               ? message + " (line " + std::to_string(line_number) + ")"
                               : message),
        line_(line_number) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ordinalscan
