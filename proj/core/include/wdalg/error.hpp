// Copyright 2026 The wdalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WDALG_ERROR_HPP_
#define WDALG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdalg {

enum class ErrorKind {
  TypeMismatch,
  PortOccupied,
  DanglingRef,
  CycleCreated,
  SignatureMismatch,
  CompositionMismatch,
  BadPermutation,
  DuplicateWire,
  BasisMismatch,
  IndexOutOfRange,
  NotStrict,
  ProgressViolation,
  ModeMismatch,
  SyntaxError,
  UnknownSymbol,
  TypeError,
  InvalidDiagram,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind lets callers dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wdalg

#endif  // WDALG_ERROR_HPP_
