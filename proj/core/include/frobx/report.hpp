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

#ifndef FROBX_REPORT_HPP
#define FROBX_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "frobx/rational.hpp"

namespace frobx {

/// One table cell. Absent (never computed) is distinct from the
/// minus-infinity end degree of the zero module.
class Cell {
 public:
  enum class Kind { Absent, Integer, Rat, Text, Bool, MinusInfinity };

  Cell() = default;
  static Cell absent() { return Cell(); }
  static Cell minus_infinity();
  static Cell of(std::int64_t v);
  static Cell of(const Rational& v);
  static Cell of(std::string v);
  static Cell of(bool v);

  Kind kind() const { return kind_; }
  std::int64_t integer() const { return integer_; }
  const Rational& rational() const { return rational_; }
  const std::string& text() const { return text_; }
  bool boolean() const { return bool_; }

 private:
  Kind kind_ = Kind::Absent;
  std::int64_t integer_ = 0;
  Rational rational_{0};
  std::string text_;
  bool bool_ = false;
};

struct SummaryEntry {
  std::string key;
  Cell value;
  bool observed = false;  // estimator from finitely many levels, not proven
};

/// Deterministic command report: byte-identical output for identical
/// inputs and format, in all three formats.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<SummaryEntry> summary;
  std::vector<std::string> warnings;
};

enum class ReportFormat { Human, Json, Csv };

std::string render_report(const Report& report, ReportFormat format);
/// Writes to the stream (or throws IoError on failure).
void emit_report(const Report& report, ReportFormat format, std::ostream& out);

}  // namespace frobx

#endif  // FROBX_REPORT_HPP
