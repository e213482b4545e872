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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frobx/cli.hpp"
#include "frobx/errors.hpp"
#include "frobx/report.hpp"
#include "frobx/session.hpp"

using namespace frobx;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kFermatSession = R"({
  "ring": {"p": 2, "vars": ["x", "y", "z"], "relations": ["x^3+y^3+z^3"]},
  "ideals": {"I": ["x", "y"], "J": ["x^2", "y^2"]}
})";

const char* kPlaneSession = R"({
  "ring": {"p": 3, "vars": ["x", "y"], "relations": []},
  "ideals": {"I": ["x*y", "x^3"], "M": ["x", "y"]}
})";

}  // namespace

TEST_CASE("session loading produces canonical polynomials") {
  Session session = parse_session_text(kFermatSession);
  CHECK(session.presentation->ring()->nvars() == 3);
  CHECK(session.presentation->relations().size() == 1);
  CHECK(session.ideal_names == std::vector<std::string>{"I", "J"});
  const IdealHandle& ideal = session.ideal("I");
  REQUIRE(ideal.generators().size() == 2);
  CHECK(ideal.generators()[0].to_string() == "x");

  // echoing the canonical strings back reproduces the same session
  nlohmann::ordered_json echo;
  echo["ring"]["p"] = 2;
  echo["ring"]["vars"] = {"x", "y", "z"};
  echo["ring"]["relations"] = {session.presentation->relations()[0].to_string()};
  echo["ideals"]["I"] = {ideal.generators()[0].to_string(), ideal.generators()[1].to_string()};
  Session again = parse_session_text(echo.dump());
  CHECK(again.ideal("I").generators() == ideal.generators());
  CHECK(again.presentation->relations() == session.presentation->relations());
}

TEST_CASE("session schema violations") {
  CHECK_THROWS_AS(parse_session_text("not json"), SchemaError);
  CHECK_THROWS_AS(parse_session_text(R"({"ring": {"p": 4, "vars": ["x"]}})"), SchemaError);
  CHECK_THROWS_AS(parse_session_text(R"({"ring": {"p": 5, "vars": []}})"), SchemaError);
  CHECK_THROWS_AS(
      parse_session_text(R"({"ring": {"p": 5, "vars": ["x"], "extra": 1}})"), SchemaError);
  CHECK_THROWS_AS(parse_session_text(R"({"ring": {"p": 5, "vars": ["x"]}, "typo": {}})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_session_text(R"({"ring": {"p": 5, "vars": ["@t"]}})"), SchemaError);
  CHECK_THROWS_AS(
      parse_session_text(R"({"ring": {"p": 5, "vars": ["x"]}, "ideals": {"2bad": ["x"]}})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_session_text(R"({"ring": {"p": 5, "vars": ["x"]}, "ideals": {"I": ["x+w"]}})"),
      ParseError);
}

TEST_CASE("bound subcommand") {
  RunResult r = run({"bound", "--curve-degree", "3", "--gen-degrees", "1,1", "--e", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha = 2") != std::string::npos);
  CHECK(r.out.find("beta = 1") != std::string::npos);

  RunResult rational = run({"bound", "--curve-degree", "1", "--gen-degrees", "2,3",
                            "--e", "-1"});
  CHECK(rational.code == 0);
  CHECK(rational.out.find("alpha = 4") != std::string::npos);
  CHECK(rational.out.find("beta = -1") != std::string::npos);

  RunResult bad = run({"bound", "--curve-degree", "3", "--gen-degrees", "11", "--e", "0"});
  CHECK(bad.code == 1);
}

TEST_CASE("exit codes cover the contract") {
  auto fermat = write_temp("frobx_test_fermat.json", kFermatSession);

  // usage errors
  CHECK(run({}).code == 1);
  CHECK(run({"unknown"}).code == 1);
  CHECK(run({"frobenius", "--session", fermat.string()}).code == 1);

  // missing session file is an I/O failure
  CHECK(run({"h0", "--session", "/nonexistent/no.json", "--ideal", "I"}).code == 4);

  // schema violation
  auto bad_p = write_temp("frobx_test_badp.json",
                          R"({"ring": {"p": 4, "vars": ["x"]}, "ideals": {}})");
  CHECK(run({"h0", "--session", bad_p.string(), "--ideal", "I"}).code == 1);

  // polynomial parse error inside the session
  auto bad_poly = write_temp("frobx_test_badpoly.json",
                             R"({"ring": {"p": 5, "vars": ["x"]}, "ideals": {"I": ["y"]}})");
  CHECK(run({"h0", "--session", bad_poly.string(), "--ideal", "I"}).code == 3);

  // bad trick element on the command line is also a parse error
  CHECK(run({"frobenius", "--session", fermat.string(), "--ideal", "I", "--emax", "1",
             "--trick-element", "w+1"})
            .code == 3);

  // mathematical precondition: inhomogeneous ideal in a graded operation
  auto crooked = write_temp(
      "frobx_test_crooked.json",
      R"({"ring": {"p": 5, "vars": ["x", "y"]}, "ideals": {"I": ["x^2-y"]}})");
  CHECK(run({"h0", "--session", crooked.string(), "--ideal", "I"}).code == 2);

  // unwritable output path
  CHECK(run({"frobenius", "--session", fermat.string(), "--ideal", "I", "--emax", "1",
             "--out", "/nonexistent/dir/out.csv"})
            .code == 4);
}

TEST_CASE("frobenius subcommand emits deterministic CSV") {
  auto fermat = write_temp("frobx_test_fermat2.json", kFermatSession);
  std::vector<std::string> args{"frobenius", "--session", fermat.string(), "--ideal", "I",
                                "--emax", "2", "--format", "csv"};
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("e,q,h0_length,h0_end,ann_exp,v,ratio_hk,ratio_v") == 0);
  CHECK(first.out.find("b_hat=3") != std::string::npos);
  CHECK(first.out.find("c_hat=3") != std::string::npos);
  CHECK(first.out.back() == '\n');

  // worker count must not affect the bytes
  std::vector<std::string> threaded = args;
  threaded.push_back("--threads");
  threaded.push_back("3");
  CHECK(run(threaded).out == first.out);
}

TEST_CASE("absent cells are empty CSV fields") {
  auto plane = write_temp("frobx_test_plane.json", kPlaneSession);
  RunResult r = run({"frobenius", "--session", plane.string(), "--ideal", "I", "--emax", "1",
                     "--format", "csv"});
  CHECK(r.code == 0);
  // the v and ratio_v columns are absent for a dimension-one ideal
  CHECK(r.out.find("1,3,18,") != std::string::npos);
  CHECK(r.out.find(",,") != std::string::npos);
}

TEST_CASE("json format carries exact rationals") {
  auto plane = write_temp("frobx_test_plane2.json", kPlaneSession);
  RunResult r = run({"frobenius", "--session", plane.string(), "--ideal", "I", "--emax", "2",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  auto root = nlohmann::json::parse(r.out);
  CHECK(root["command"] == "frobenius");
  REQUIRE(root["rows"].size() == 2);
  CHECK(root["rows"][0]["ratio_hk"]["num"] == 2);
  CHECK(root["rows"][0]["ratio_hk"]["den"] == 1);
  CHECK(root["rows"][0]["v"].is_null());
  CHECK(root["summary"]["b_hat"]["observed"] == true);
  CHECK(root["summary"]["b_hat"]["value"] == 3);
}

TEST_CASE("powers subcommand reports the waldschmidt estimate") {
  const char* cone_session = R"({
    "ring": {"p": 101, "vars": ["x", "y", "z"], "relations": ["z^2-x*y"]},
    "ideals": {"P": ["x", "z"]}
  })";
  auto cone = write_temp("frobx_test_cone.json", cone_session);
  RunResult r = run({"powers", "--session", cone.string(), "--ideal", "P", "--nmax", "4",
                     "--symbolic", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n,h0_length,h0_end,ann_exp,alpha_sat,ratio_alpha,ratio_len") == 0);
  CHECK(r.out.find("waldschmidt_upper=1/2") != std::string::npos);
  CHECK(r.out.find("d_hat=1") != std::string::npos);
}

TEST_CASE("closure subcommand") {
  auto fermat = write_temp("frobx_test_fermat3.json", kFermatSession);
  RunResult r = run({"closure", "--session", fermat.string(), "--ideal", "I", "--element",
                     "z^2", "--emax", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("frobenius_member") != std::string::npos);
  CHECK(r.out.find("tight_witness") != std::string::npos);
}

TEST_CASE("hilbert subcommand prints dimensions") {
  auto plane = write_temp("frobx_test_plane3.json", kPlaneSession);
  RunResult r = run({"hilbert", "--session", plane.string(), "--ideal", "M",
                     "--max-degree", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("numerator") != std::string::npos);
  CHECK(r.out.find("krull_dim = 0") != std::string::npos);
}

TEST_CASE("report rendering contracts") {
  Report report;
  report.command = "demo";
  report.columns = {"a", "b"};
  CHECK(render_report(report, ReportFormat::Csv) == "a,b\n");

  report.rows.push_back({Cell::of(Rational(49, 16)), Cell::absent()});
  report.rows.push_back({Cell::of(std::int64_t(2)), Cell::minus_infinity()});
  report.summary.push_back({"estimate", Cell::of(Rational(1, 2)), true});
  std::string csv = render_report(report, ReportFormat::Csv);
  CHECK(csv == "a,b\n49/16,\n2,-inf\nestimate=1/2\n");

  std::string json_text = render_report(report, ReportFormat::Json);
  auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["rows"][0]["a"]["num"] == 49);
  CHECK(parsed["rows"][0]["a"]["den"] == 16);
  CHECK(parsed["rows"][0]["b"].is_null());
  CHECK(parsed["rows"][1]["b"] == "-inf");

  std::string human = render_report(report, ReportFormat::Human);
  CHECK(human.find("49/16") != std::string::npos);
  CHECK(human.find("[observed, not proven]") != std::string::npos);
}

TEST_CASE("selftest subcommand runs the quick corpus") {
  RunResult r = run({"selftest", "--quick"});
  // two criteria document upstream defects and stay red by design
  CHECK(r.code == 2);
  CHECK(r.out.find("PASS  1  fermat-cubic-annihilation") == 0);
  CHECK(r.out.find("12  nodal-cubic-shape") != std::string::npos);
}
