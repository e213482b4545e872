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

#ifndef FROBX_CLI_HPP
#define FROBX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace frobx {

/// Dispatches a full command line (without argv[0]). Exit codes:
///   0 success, 1 usage or session-schema error, 2 violated mathematical
///   precondition (or failed selftest), 3 polynomial parse error, 4 I/O.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobx

#endif  // FROBX_CLI_HPP
