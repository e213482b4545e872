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

#ifndef FROBX_SESSION_HPP
#define FROBX_SESSION_HPP

#include <map>
#include <string>
#include <vector>

#include "frobx/ideal.hpp"

namespace frobx {

/// A ring/ideal workspace loaded from a session file.
struct Session {
  PresentationPtr presentation;
  std::map<std::string, IdealHandle> ideals;
  std::vector<std::string> ideal_names;  // file order

  const IdealHandle& ideal(const std::string& name) const;
};

/// Strict JSON schema:
///   { "ring": { "p": <int>, "vars": [..], "relations": [..] },
///     "ideals": { <name>: [ <generator strings> ] } }
/// "relations" may be empty or omitted; unknown keys are an error.
/// Throws SchemaError (bad shape, bad modulus), ParseError (bad polynomial,
/// annotated with the ideal name) or IoError (unreadable file).
Session load_session(const std::string& path);
Session parse_session_text(const std::string& text);

}  // namespace frobx

#endif  // FROBX_SESSION_HPP
