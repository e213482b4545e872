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

#include "frobx/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "frobx/errors.hpp"

namespace frobx {

Cell Cell::minus_infinity() {
  Cell c;
  c.kind_ = Kind::MinusInfinity;
  return c;
}

Cell Cell::of(std::int64_t v) {
  Cell c;
  c.kind_ = Kind::Integer;
  c.integer_ = v;
  return c;
}

Cell Cell::of(const Rational& v) {
  Cell c;
  c.kind_ = Kind::Rat;
  c.rational_ = v;
  return c;
}

Cell Cell::of(std::string v) {
  Cell c;
  c.kind_ = Kind::Text;
  c.text_ = std::move(v);
  return c;
}

Cell Cell::of(bool v) {
  Cell c;
  c.kind_ = Kind::Bool;
  c.bool_ = v;
  return c;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string cell_plain(const Cell& c, bool human) {
  switch (c.kind()) {
    case Cell::Kind::Absent:
      return "";
    case Cell::Kind::Integer:
      return std::to_string(c.integer());
    case Cell::Kind::Rat:
      return human ? rational_human(c.rational()) : rational_slash(c.rational());
    case Cell::Kind::Text:
      return c.text();
    case Cell::Kind::Bool:
      return c.boolean() ? "true" : "false";
    case Cell::Kind::MinusInfinity:
      return "-inf";
  }
  return "";
}

nlohmann::ordered_json cell_json(const Cell& c) {
  switch (c.kind()) {
    case Cell::Kind::Absent:
      return nullptr;
    case Cell::Kind::Integer:
      return c.integer();
    case Cell::Kind::Rat:
      return nlohmann::ordered_json{{"num", c.rational().numerator()},
                                    {"den", c.rational().denominator()}};
    case Cell::Kind::Text:
      return c.text();
    case Cell::Kind::Bool:
      return c.boolean();
    case Cell::Kind::MinusInfinity:
      return "-inf";
  }
  return nullptr;
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out << ",";
    out << csv_quote(report.columns[i]);
  }
  if (!report.columns.empty()) out << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << csv_quote(cell_plain(row[i], false));
    }
    out << "\n";
  }
  for (const auto& entry : report.summary) {
    out << entry.key << "=" << cell_plain(entry.value, false) << "\n";
  }
  for (const auto& w : report.warnings) {
    out << "warning=" << csv_quote(w) << "\n";
  }
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json root;
  root["command"] = report.command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  root["inputs"] = std::move(inputs);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      obj[report.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  root["rows"] = std::move(rows);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& entry : report.summary) {
    if (entry.observed) {
      summary[entry.key] =
          nlohmann::ordered_json{{"value", cell_json(entry.value)}, {"observed", true}};
    } else {
      summary[entry.key] = cell_json(entry.value);
    }
  }
  root["summary"] = std::move(summary);
  root["warnings"] = report.warnings;
  return root.dump(2) + "\n";
}

std::string render_human(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (!report.inputs.empty()) {
    out << "inputs:\n";
    for (const auto& [k, v] : report.inputs) out << "  " << k << " = " << v << "\n";
  }
  if (!report.columns.empty()) {
    std::vector<std::size_t> width(report.columns.size());
    for (std::size_t i = 0; i < report.columns.size(); ++i) width[i] = report.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : report.rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(cell_plain(row[i], true));
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    out << "\n";
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      if (i) out << "  ";
      out << report.columns[i] << std::string(width[i] - report.columns[i].size(), ' ');
    }
    out << "\n";
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) out << "  ";
        out << line[i] << std::string(width[i] - line[i].size(), ' ');
      }
      out << "\n";
    }
  }
  if (!report.summary.empty()) {
    out << "\nsummary:\n";
    for (const auto& entry : report.summary) {
      out << "  " << entry.key << " = " << cell_plain(entry.value, true);
      if (entry.observed) out << "  [observed, not proven]";
      out << "\n";
    }
  }
  if (!report.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : report.warnings) out << "  - " << w << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Human:
      return render_human(report);
    case ReportFormat::Json:
      return render_json(report);
    case ReportFormat::Csv:
      return render_csv(report);
  }
  return "";
}

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
  out << render_report(report, format);
  out.flush();
  if (out.bad()) throw IoError("failed to write the report");
}

}  // namespace frobx
