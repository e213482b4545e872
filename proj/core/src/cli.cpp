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

#include "frobx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "frobx/errors.hpp"
#include "frobx/frobenius_lab.hpp"
#include "frobx/report.hpp"
#include "frobx/selftest.hpp"
#include "frobx/session.hpp"

namespace frobx {

namespace {

ReportFormat parse_format(const std::string& name) {
  if (name == "human") return ReportFormat::Human;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw SchemaError("unknown format \"" + name + "\"");
}

std::int64_t parse_integer(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::invalid_argument&) {
    throw SchemaError("not an integer: \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw SchemaError("integer out of range: \"" + text + "\"");
  }
  if (used != text.size()) throw SchemaError("not an integer: \"" + text + "\"");
  return value;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  std::int64_t num = parse_integer(text.substr(0, slash));
  std::int64_t den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw SchemaError("rational with zero denominator: " + text);
  return Rational(num, den);
}

std::string numerator_string(const std::vector<std::int64_t>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::int64_t c = coeffs[d];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += d == 1 ? "t" : "t^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

Cell end_cell(const std::optional<std::int64_t>& end) {
  return end ? Cell::of(*end) : Cell::minus_infinity();
}

void write_report(const Report& report, ReportFormat format, const std::string& out_path,
                  std::ostream& fallback) {
  if (out_path.empty()) {
    emit_report(report, format, fallback);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file \"" + out_path + "\"");
  emit_report(report, format, file);
  if (!file) throw IoError("failed writing output file \"" + out_path + "\"");
}

struct CommonArgs {
  std::string session_path;
  std::string ideal_name;
};

void cmd_hilbert(const CommonArgs& common, std::int64_t max_degree, std::ostream& out) {
  Session session = load_session(common.session_path);
  const IdealHandle& ideal = session.ideal(common.ideal_name);
  HilbertNumerator numerator = hilbert_numerator(ideal);
  auto dim = krull_dimension(ideal);

  Report report;
  report.command = "hilbert";
  report.inputs = {{"session", common.session_path},
                   {"ideal", common.ideal_name},
                   {"max_degree", std::to_string(max_degree)}};
  report.columns = {"degree", "dimension"};
  std::size_t nvars = ideal.ring()->nvars();
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    report.rows.push_back({Cell::of(d), Cell::of(hilbert_dimension_at(numerator, nvars, d))});
  }
  report.summary.push_back({"numerator", Cell::of(numerator_string(numerator.coefficients)), false});
  report.summary.push_back({"krull_dim", dim ? Cell::of(*dim) : Cell::minus_infinity(), false});
  bool finite = has_finite_colength(ideal);
  report.summary.push_back({"finite_colength", Cell::of(finite), false});
  if (finite) {
    report.summary.push_back({"length", Cell::of(length_of_quotient(ideal)), false});
    report.summary.push_back({"end", end_cell(end_degree(ideal)), false});
  }
  emit_report(report, ReportFormat::Human, out);
}

void cmd_h0(const CommonArgs& common, std::ostream& out) {
  Session session = load_session(common.session_path);
  const IdealHandle& ideal = session.ideal(common.ideal_name);
  H0Summary h0 = h0_summary(ideal);

  Report report;
  report.command = "h0";
  report.inputs = {{"session", common.session_path}, {"ideal", common.ideal_name}};
  report.columns = {"degree", "dimension"};
  for (std::size_t d = 0; d < h0.diff.size(); ++d) {
    if (h0.diff[d] != 0) {
      report.rows.push_back({Cell::of(static_cast<std::int64_t>(d)), Cell::of(h0.diff[d])});
    }
  }
  report.summary.push_back({"length", Cell::of(h0.length), false});
  report.summary.push_back({"end", end_cell(h0.end), false});
  report.summary.push_back({"saturation_step", Cell::of(h0.saturation_step), false});
  std::string sat;
  for (const auto& g : h0.saturation.basis().elements()) {
    if (!sat.empty()) sat += ", ";
    sat += g.to_string();
  }
  report.summary.push_back({"saturation", Cell::of(sat), false});
  emit_report(report, ReportFormat::Human, out);
}

void cmd_frobenius(const CommonArgs& common, std::uint32_t e_max, const std::string& trick_text,
                   unsigned threads, const std::string& format_name,
                   const std::string& out_path, std::ostream& out) {
  Session session = load_session(common.session_path);
  const IdealHandle& ideal = session.ideal(common.ideal_name);
  std::optional<Polynomial> trick;
  if (!trick_text.empty()) {
    trick = parse_polynomial(trick_text, ideal.ring());
  }
  FrobeniusProfile profile = frobenius_profile(ideal, e_max, threads, trick);

  Report report;
  report.command = "frobenius";
  report.inputs = {{"session", common.session_path},
                   {"ideal", common.ideal_name},
                   {"emax", std::to_string(e_max)}};
  if (trick) report.inputs.push_back({"trick_element", trick->to_string()});
  report.columns = {"e", "q", "h0_length", "h0_end", "ann_exp", "v", "ratio_hk", "ratio_v"};
  if (trick) report.columns.push_back("trick_length");
  for (const auto& row : profile.rows) {
    std::vector<Cell> cells{Cell::of(static_cast<std::int64_t>(row.e)),
                            Cell::of(row.q),
                            Cell::of(row.h0_length),
                            end_cell(row.h0_end),
                            Cell::of(row.ann_exp),
                            row.v ? Cell::of(*row.v) : Cell::absent(),
                            Cell::of(row.ratio_hk),
                            row.ratio_v ? Cell::of(*row.ratio_v) : Cell::absent()};
    if (trick) {
      cells.push_back(row.trick_length ? Cell::of(*row.trick_length) : Cell::absent());
      if (row.trick_length && *row.trick_length != row.h0_length) {
        report.warnings.push_back("trick length disagrees with H0 length at e = " +
                                  std::to_string(row.e));
      }
    }
    report.rows.push_back(std::move(cells));
  }
  report.summary.push_back({"b_hat", Cell::of(profile.b_hat), true});
  report.summary.push_back({"c_hat", Cell::of(profile.c_hat), true});
  report.summary.push_back({"dim", Cell::of(profile.dim), false});
  if (profile.rows.size() >= 2) {
    EghkEstimate eghk = eghk_estimate(profile);
    report.summary.push_back({"eghk", Cell::of(eghk.value), true});
    report.summary.push_back(
        {"eghk_mode", Cell::of(std::string(eghk.exact ? "exact" : "estimate")), true});
  }
  write_report(report, parse_format(format_name), out_path, out);
}

void cmd_powers(const CommonArgs& common, std::uint32_t n_max, bool symbolic, unsigned threads,
                const std::string& format_name, const std::string& out_path, std::ostream& out) {
  Session session = load_session(common.session_path);
  const IdealHandle& ideal = session.ideal(common.ideal_name);
  PowersProfile profile = powers_profile(ideal, n_max, symbolic, threads);

  Report report;
  report.command = "powers";
  report.inputs = {{"session", common.session_path},
                   {"ideal", common.ideal_name},
                   {"nmax", std::to_string(n_max)},
                   {"symbolic", symbolic ? "true" : "false"}};
  report.columns = {"n", "h0_length", "h0_end", "ann_exp", "alpha_sat", "ratio_alpha",
                    "ratio_len"};
  for (const auto& row : profile.rows) {
    report.rows.push_back({Cell::of(static_cast<std::int64_t>(row.n)),
                           Cell::of(row.h0_length),
                           end_cell(row.h0_end),
                           Cell::of(row.ann_exp),
                           Cell::of(row.alpha_sat),
                           Cell::of(row.ratio_alpha),
                           Cell::of(row.ratio_len)});
  }
  report.summary.push_back({"d_hat", Cell::of(profile.d_hat), true});
  report.summary.push_back({"waldschmidt_upper", Cell::of(profile.waldschmidt_upper), true});
  report.summary.push_back({"dim", Cell::of(profile.dim), false});
  report.warnings = profile.warnings;
  write_report(report, parse_format(format_name), out_path, out);
}

void cmd_closure(const CommonArgs& common, const std::string& element_text, std::uint32_t e_max,
                 std::uint32_t witness_cap, std::ostream& out) {
  Session session = load_session(common.session_path);
  const IdealHandle& ideal = session.ideal(common.ideal_name);
  Polynomial element = parse_polynomial(element_text, ideal.ring());
  ClosureReport closure = closure_report(element, ideal, e_max, witness_cap);

  Report report;
  report.command = "closure";
  report.inputs = {{"session", common.session_path},
                   {"ideal", common.ideal_name},
                   {"element", element.to_string()},
                   {"emax", std::to_string(e_max)},
                   {"witness_cap", std::to_string(witness_cap)}};
  report.columns = {"e", "q", "power_in_frobenius_power"};
  for (std::uint32_t e = 0; e <= e_max; ++e) {
    bool member = frobenius_power(ideal, e).contains(element.frobenius(e));
    report.rows.push_back(
        {Cell::of(static_cast<std::int64_t>(e)),
         Cell::of(static_cast<std::int64_t>(frobenius_power_of(ideal.ring()->field(), e))),
         Cell::of(member)});
  }
  report.summary.push_back(
      {"frobenius_member",
       closure.frobenius_member
           ? Cell::of(static_cast<std::int64_t>(*closure.frobenius_member))
           : Cell::of(std::string("not up to e_max")),
       false});
  report.summary.push_back(
      {"tight_witness",
       closure.tight_witness ? Cell::of(closure.tight_witness->to_string())
                             : Cell::of(std::string("none found")),
       true});
  if (closure.tight_witness) {
    report.summary.push_back(
        {"witness_verified_up_to",
         Cell::of(static_cast<std::int64_t>(closure.witness_verified_up_to)), true});
  }
  emit_report(report, ReportFormat::Human, out);
}

void cmd_bound(std::int64_t curve_degree, const std::string& gen_degrees,
               const std::string& excess_text, std::ostream& out) {
  auto comma = gen_degrees.find(',');
  if (comma == std::string::npos) {
    throw SchemaError("--gen-degrees wants two comma-separated integers, e.g. 1,1");
  }
  std::int64_t d1 = parse_integer(gen_degrees.substr(0, comma));
  std::int64_t d2 = parse_integer(gen_degrees.substr(comma + 1));
  Rational excess = parse_rational(excess_text);
  BrennerBound bound = brenner_bound(curve_degree, d1, d2, excess);

  Report report;
  report.command = "bound";
  report.inputs = {{"curve_degree", std::to_string(curve_degree)},
                   {"gen_degrees", gen_degrees},
                   {"e", excess_text}};
  report.summary.push_back({"alpha", Cell::of(bound.alpha), false});
  report.summary.push_back({"beta", Cell::of(bound.beta), false});
  emit_report(report, ReportFormat::Human, out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of Frobenius and ordinary powers over prime fields", "frobx"};
  app.require_subcommand(1);

  CommonArgs common;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert numerator and dimensions");
  std::int64_t max_degree = 10;
  hilbert->add_option("--session", common.session_path)->required();
  hilbert->add_option("--ideal", common.ideal_name)->required();
  hilbert->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

  auto* h0 = app.add_subcommand("h0", "zeroth local cohomology of R/J");
  h0->add_option("--session", common.session_path)->required();
  h0->add_option("--ideal", common.ideal_name)->required();

  auto* frobenius = app.add_subcommand("frobenius", "profile of Frobenius powers");
  std::uint32_t e_max = 1;
  std::string trick_text;
  unsigned threads = 1;
  std::string format_name = "human";
  std::string out_path;
  frobenius->add_option("--session", common.session_path)->required();
  frobenius->add_option("--ideal", common.ideal_name)->required();
  frobenius->add_option("--emax", e_max)->required()->check(CLI::PositiveNumber);
  frobenius->add_option("--trick-element", trick_text);
  frobenius->add_option("--threads", threads)->check(CLI::PositiveNumber);
  frobenius->add_option("--format", format_name)->check(CLI::IsMember({"human", "json", "csv"}));
  frobenius->add_option("--out", out_path);

  auto* powers = app.add_subcommand("powers", "profile of ordinary powers");
  std::uint32_t n_max = 1;
  bool symbolic = false;
  powers->add_option("--session", common.session_path)->required();
  powers->add_option("--ideal", common.ideal_name)->required();
  powers->add_option("--nmax", n_max)->required()->check(CLI::PositiveNumber);
  powers->add_flag("--symbolic", symbolic);
  powers->add_option("--threads", threads)->check(CLI::PositiveNumber);
  powers->add_option("--format", format_name)->check(CLI::IsMember({"human", "json", "csv"}));
  powers->add_option("--out", out_path);

  auto* closure = app.add_subcommand("closure", "Frobenius/tight closure probes");
  std::string element_text;
  std::uint32_t witness_cap = 4;
  closure->add_option("--session", common.session_path)->required();
  closure->add_option("--ideal", common.ideal_name)->required();
  closure->add_option("--element", element_text)->required();
  closure->add_option("--emax", e_max)->required()->check(CLI::PositiveNumber);
  closure->add_option("--witness-cap", witness_cap)->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "degree-data annihilation bound for plane curves");
  std::int64_t curve_degree = 0;
  std::string gen_degrees;
  std::string excess_text = "0";
  bound->add_option("--curve-degree", curve_degree)->required()->check(CLI::PositiveNumber);
  bound->add_option("--gen-degrees", gen_degrees)->required();
  bound->add_option("--e", excess_text)->required();

  auto* selftest = app.add_subcommand("selftest", "run the embedded verification corpus");
  bool quick = false;
  selftest->add_flag("--quick", quick);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (hilbert->parsed()) {
      cmd_hilbert(common, max_degree, out);
    } else if (h0->parsed()) {
      cmd_h0(common, out);
    } else if (frobenius->parsed()) {
      cmd_frobenius(common, e_max, trick_text, threads, format_name, out_path, out);
    } else if (powers->parsed()) {
      cmd_powers(common, n_max, symbolic, threads, format_name, out_path, out);
    } else if (closure->parsed()) {
      cmd_closure(common, element_text, e_max, witness_cap, out);
    } else if (bound->parsed()) {
      cmd_bound(curve_degree, gen_degrees, excess_text, out);
    } else if (selftest->parsed()) {
      auto results = run_acceptance_suite(quick, out);
      return count_failures(results) == 0 ? 0 : 2;
    }
    return 0;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace frobx
