// Copyright 2026 The rankguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rankguard {

enum class ErrorKind {
  NotIrreducible,
  UnsupportedSize,
  DivisionByZero,
  AmbientMismatch,
  DimensionMismatch,
  LengthMismatch,
  EnumerationTooLarge,
  DependentPoints,
  DegreeTooSmall,
  NotSystematizable,
  EmptyIndexSet,
  NotASubcode,
  PacketTooShort,
  BadDimensions,
  DegreeMismatch,
  InfeasibleRank,
  BudgetExceeded,
  SuiteUnknown,
  InvalidConfig,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this exception; `kind()` lets
/// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::DependentPoints: return "DependentPoints";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotSystematizable: return "NotSystematizable";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::NotASubcode: return "NotASubcode";
    case ErrorKind::PacketTooShort: return "PacketTooShort";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InfeasibleRank: return "InfeasibleRank";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SuiteUnknown: return "SuiteUnknown";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace rankguard
