// Copyright 2026 The revexp Authors
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

#include <stdexcept>
#include <string>

namespace revexp {

/// Base class of every error raised by the library.
class RevexpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// A numeric argument lies outside the mathematical domain of an operation.
class DomainError : public RevexpError {
 public:
  using RevexpError::RevexpError;
  const char* kind() const noexcept override { return "domain_error"; }
};

/// A problem specification or plan is inconsistent.
class InvalidSpecError : public RevexpError {
 public:
  using RevexpError::RevexpError;
  const char* kind() const noexcept override { return "invalid_spec"; }
};

/// Valid input that the construction does not support (e.g. space-saving with m <= 3).
class UnsupportedParameterError : public RevexpError {
 public:
  using RevexpError::RevexpError;
  const char* kind() const noexcept override { return "unsupported_parameter"; }
};

/// A malformed circuit, gate or serialized circuit document.
class StructuralError : public RevexpError {
 public:
  using RevexpError::RevexpError;
  const char* kind() const noexcept override { return "structural_error"; }
};

}  // namespace revexp
