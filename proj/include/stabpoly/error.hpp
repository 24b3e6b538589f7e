/* Copyright 2026 The stabpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabpoly {

enum class ErrorKind {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  TowerTooDeep,
  FieldTooLarge,
  DivisionByZero,
  ContextMismatch,
  NotASubfield,
  DegreeCapExceeded,
  ZeroPolynomial,
  ConstantPolynomial,
  ConstantDerivative,
  ZeroDerivative,
  WrongCharacteristic,
  WrongDegree,
  WrongShape,
  PreconditionViolated,
  ReducibleIterate,
  BudgetExceeded,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TowerTooDeep: return "TowerTooDeep";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::ConstantDerivative: return "ConstantDerivative";
    case ErrorKind::ZeroDerivative: return "ZeroDerivative";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ReducibleIterate: return "ReducibleIterate";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every stabpoly operation. The kind is stable and
/// machine-checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stabpoly
