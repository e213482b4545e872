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

#ifndef FROBX_SELFTEST_HPP
#define FROBX_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace frobx {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the embedded verification corpus, printing one PASS/FAIL line per
/// criterion as it completes. `quick` trims the largest Frobenius levels.
std::vector<CriterionResult> run_acceptance_suite(bool quick, std::ostream& out);

/// Number of failed criteria.
int count_failures(const std::vector<CriterionResult>& results);

}  // namespace frobx

#endif  // FROBX_SELFTEST_HPP
