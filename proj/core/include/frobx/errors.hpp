// Copyright 2026 The frobx Authors.
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

#ifndef FROBX_ERRORS_HPP
#define FROBX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobx {

/// Base class for all recoverable frobx errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text (undeclared variable, bad token, overflow).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Session file violates the JSON schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition was violated (non-homogeneous input,
/// infinite length where finite is required, invalid trick element, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// Filesystem / stream failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frobx

#endif  // FROBX_ERRORS_HPP
