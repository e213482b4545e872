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

#include "frobx/errors.hpp"
#include "frobx/frobenius_lab.hpp"

using namespace frobx;

namespace {

PresentationPtr plain(std::uint64_t p, std::vector<std::string> vars) {
  return make_presentation(make_ring(p, std::move(vars)));
}

PresentationPtr fermat_f2() {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  return make_presentation(ring, {parse_polynomial("x^3+y^3+z^3", ring)});
}

PresentationPtr cone(std::uint64_t p) {
  RingPtr ring = make_ring(p, {"x", "y", "z"});
  return make_presentation(ring, {parse_polynomial("z^2-x*y", ring)});
}

std::vector<Polynomial> monomials_of(const RingPtr& ring, std::uint32_t degree) {
  std::vector<Polynomial> out;
  std::vector<std::uint32_t> exps(ring->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == ring->nvars()) {
      exps[var] = left;
      out.push_back(Polynomial::from_monomial(ring, Monomial(exps)));
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// a(J) is exact: degree-a monomials annihilate, some degree-(a-1) does not
void check_annihilation_is_sharp(const IdealHandle& power, std::int64_t a) {
  REQUIRE(a > 0);
  IdealHandle sat = saturate_irrelevant(power).saturation;
  std::vector<Polynomial> carriers;
  for (const auto& g : sat.basis().elements()) {
    if (!power.contains(g)) carriers.push_back(g);
  }
  REQUIRE(!carriers.empty());
  for (const auto& mu : monomials_of(power.ring(), static_cast<std::uint32_t>(a))) {
    for (const auto& g : carriers) CHECK(power.contains(mu * g));
  }
  bool witness = false;
  for (const auto& mu : monomials_of(power.ring(), static_cast<std::uint32_t>(a - 1))) {
    for (const auto& g : carriers) {
      if (!power.contains(mu * g)) witness = true;
    }
  }
  CHECK(witness);
}

}  // namespace

TEST_CASE("annihilation exponents") {
  auto fermat = fermat_f2();
  IdealHandle linear = parse_ideal(fermat, {"x", "y"});
  CHECK(ann_exponent(frobenius_power(linear, 1)) == 5);  // 2q+1 at q=2
  check_annihilation_is_sharp(frobenius_power(linear, 1), 5);

  auto cone5 = cone(5);
  IdealHandle pair = parse_ideal(cone5, {"x", "y"});
  CHECK(ann_exponent(frobenius_power(pair, 1)) == 10);  // 2q at q=5
  check_annihilation_is_sharp(frobenius_power(pair, 1), 10);

  IdealHandle saturated = parse_ideal(cone5, {"x", "z"});
  CHECK(ann_exponent(saturated) == 0);
}

TEST_CASE("profile of the zero ideal is identically zero") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle zero(pres, {});
  FrobeniusProfile profile = frobenius_profile(zero, 2);
  for (const auto& row : profile.rows) {
    CHECK(row.h0_length == 0);
    CHECK(row.ratio_hk == Rational(0));
    CHECK(row.ann_exp == 0);
  }
  CHECK(profile.b_hat == 0);

  FrobeniusProfile single = frobenius_profile(zero, 1);
  CHECK_THROWS_AS(eghk_estimate(single), MathError);
}

TEST_CASE("frobenius profile of the plane binomial ideal") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  FrobeniusProfile profile = frobenius_profile(ideal, 2);
  REQUIRE(profile.rows.size() == 2);
  for (const auto& row : profile.rows) {
    CHECK(row.h0_length == 2 * row.q * row.q);
    CHECK(ceil_div(row.ann_exp, row.q) == 3);
    CHECK(row.ratio_hk == Rational(2));
    CHECK_FALSE(row.v.has_value());  // not primary to the irrelevant ideal
  }
  CHECK(profile.b_hat == 3);
  CHECK(profile.c_hat == 3);
  CHECK(profile.dim == 2);

  EghkEstimate eghk = eghk_estimate(profile);
  CHECK(eghk.exact);
  CHECK(eghk.value == Rational(2));

  check_annihilation_is_sharp(frobenius_power(ideal, 1), profile.rows[0].ann_exp);
}

TEST_CASE("profile rows transport along Frobenius powers of the base ideal") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  IdealHandle shifted = frobenius_power(ideal, 1);
  FrobeniusProfile outer = frobenius_profile(ideal, 3);
  FrobeniusProfile inner = frobenius_profile(shifted, 2);
  for (std::size_t i = 0; i < inner.rows.size(); ++i) {
    CHECK(inner.rows[i].h0_length == outer.rows[i + 1].h0_length);
    CHECK(inner.rows[i].h0_end == outer.rows[i + 1].h0_end);
    CHECK(inner.rows[i].ann_exp == outer.rows[i + 1].ann_exp);
  }
}

TEST_CASE("proposition-style scaling over the polynomial ring") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  FrobeniusProfile profile = frobenius_profile(ideal, 3);
  // h0(e+1) = p^m h0(e) with m = 2 variables
  for (std::size_t i = 0; i + 1 < profile.rows.size(); ++i) {
    CHECK(profile.rows[i + 1].h0_length == 9 * profile.rows[i].h0_length);
  }
}

TEST_CASE("v column on finite-colength rows") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle maximal = parse_ideal(pres, {"x", "y"});
  FrobeniusProfile profile = frobenius_profile(maximal, 2);
  for (const auto& row : profile.rows) {
    REQUIRE(row.v.has_value());
    CHECK(*row.v == 2 * (row.q - 1));
    // H0 is all of R/I^[q], so v dominates its top degree
    CHECK(*row.v >= *row.h0_end);
    std::int64_t bound = ceil_div(row.ann_exp, row.q);
    CHECK(Rational(bound - 1) <= *row.ratio_v);
    CHECK(*row.ratio_v <= Rational(bound));
  }
}

TEST_CASE("two-length trick") {
  // ordinary family on the cone: l(H0(R/p^2)) = 1
  auto cone101 = cone(101);
  IdealHandle prime = parse_ideal(cone101, {"x", "z"});
  Polynomial y = parse_polynomial("y", cone101->ring());
  CHECK(element_trick_length(prime, y, FamilyKind::Ordinary, 2) == 1);
  CHECK(element_trick_length(prime, y, FamilyKind::Ordinary, 2) ==
        h0_summary(ordinary_power(prime, 2)).length);

  // Frobenius family on the plane binomial ideal
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  Polynomial s = parse_polynomial("y", pres->ring());
  for (std::uint32_t e : {1u, 2u}) {
    std::int64_t q = e == 1 ? 3 : 9;
    CHECK(element_trick_length(ideal, s, FamilyKind::Frobenius, e) == 2 * q * q);
  }

  // for a finite-colength ideal the trick returns the full length
  auto fermat = fermat_f2();
  IdealHandle linear = parse_ideal(fermat, {"x", "y"});
  Polynomial z3 = parse_polynomial("z^3", fermat->ring());
  for (std::uint32_t e : {1u, 2u}) {
    CHECK(element_trick_length(linear, z3, FamilyKind::Frobenius, e) ==
          length_of_quotient(frobenius_power(linear, e)));
  }

  // an element inside every minimal prime fails the certificate
  Polynomial x = parse_polynomial("x", pres->ring());
  CHECK_THROWS_AS(element_trick_length(ideal, x, FamilyKind::Frobenius, 1), MathError);
}

TEST_CASE("trick-element search") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  CHECK(find_trick_element(ideal, 4, FamilyKind::Frobenius) ==
        parse_polynomial("y", pres->ring()));

  auto cone5 = cone(5);
  IdealHandle prime = parse_ideal(cone5, {"x", "z"});
  CHECK(find_trick_element(prime, 4, FamilyKind::Frobenius) ==
        parse_polynomial("y", cone5->ring()));

  IdealHandle maximal = parse_ideal(pres, {"x", "y"});
  CHECK_THROWS_AS(find_trick_element(maximal, 4, FamilyKind::Frobenius), MathError);
}

TEST_CASE("powers profile of the cone prime") {
  auto pres = cone(101);
  IdealHandle prime = parse_ideal(pres, {"x", "z"});
  PowersProfile profile = powers_profile(prime, 4, /*symbolic=*/true);
  REQUIRE(profile.rows.size() == 4);
  std::vector<std::int64_t> expected_alpha{1, 1, 2, 2};  // ceil(n/2)
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(profile.rows[i].alpha_sat == expected_alpha[i]);
  }
  CHECK(profile.d_hat == 1);
  CHECK(profile.waldschmidt_upper == Rational(1, 2));
  CHECK(profile.warnings.empty());

  // ratio_alpha is subadditive along the computed rows
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; n + m <= 4; ++m) {
      CHECK(profile.rows[n + m - 1].alpha_sat <=
            profile.rows[n - 1].alpha_sat + profile.rows[m - 1].alpha_sat);
    }
  }
}

TEST_CASE("powers profile warns when the symbolic assertion is doubtful") {
  auto pres = cone(101);
  IdealHandle point = parse_ideal(pres, {"x", "y", "z"});
  // dim R/m = 0 and m is not saturated, so the symbolic assertion cannot hold
  PowersProfile profile = powers_profile(point, 2, /*symbolic=*/true);
  CHECK(!profile.warnings.empty());
}

TEST_CASE("symbolic powers on the cone") {
  auto pres = cone(101);
  IdealHandle prime = parse_ideal(pres, {"x", "z"});
  CHECK(symbolic_power(prime, 1) == prime);
  CHECK(symbolic_power(prime, 2) == parse_ideal(pres, {"x"}));
  // odd levels saturate to (x^{n+1}, x^n z), strictly above (x^{n+1}, z^{2n+1})
  IdealHandle third = symbolic_power(prime, 3);
  CHECK(third == parse_ideal(pres, {"x^2", "x*z"}));
  CHECK(third.contains(parse_polynomial("z^3", pres->ring())));

  // independent oracle: saturate by the single element y, which avoids
  // every associated prime except the irrelevant ideal
  for (std::uint32_t n : {2u, 3u, 4u, 5u}) {
    IdealHandle power = ordinary_power(prime, n);
    IdealHandle by_y = power;
    for (int step = 0; step < 64; ++step) {
      IdealHandle next = colon_element(by_y, parse_polynomial("y", pres->ring()));
      if (next == by_y) break;
      by_y = next;
    }
    CHECK(symbolic_power(prime, n) == by_y);
  }

  IdealHandle maximal = parse_ideal(pres, {"x", "y", "z"});
  CHECK_THROWS_AS(symbolic_power(maximal, 2), MathError);
}

TEST_CASE("containment inequality checks") {
  auto pres = cone(101);
  IdealHandle prime = parse_ideal(pres, {"x", "z"});
  PowersProfile profile = powers_profile(prime, 4, /*symbolic=*/true);

  // with the formal substitution N = 1 the inequality fails at n = 2
  auto checks = chudnovsky_check(profile, alpha(prime), 1);
  CHECK_FALSE(checks[1]);

  // equality case: p = (x) in the plane has alpha(sat(p^n)) = n
  auto free2 = plain(101, {"x", "y"});
  IdealHandle line = parse_ideal(free2, {"x"});
  PowersProfile flat = powers_profile(line, 3, /*symbolic=*/true);
  auto all_true = chudnovsky_check(flat, 1, 1);
  for (bool ok : all_true) CHECK(ok);

  PowersProfile plainp = powers_profile(prime, 2, /*symbolic=*/false);
  CHECK_THROWS_AS(chudnovsky_check(plainp, 1, 1), MathError);
}

TEST_CASE("frobenius closure probes") {
  auto fermat = fermat_f2();
  IdealHandle linear = parse_ideal(fermat, {"x", "y"});
  RingPtr ring = fermat->ring();

  // z^3 = F + x^3 + y^3 lies in the ideal itself
  CHECK(frobenius_closure_probe(parse_polynomial("z^3", ring), linear, 3) == 0);
  CHECK(frobenius_closure_probe(parse_polynomial("x", ring), linear, 3) == 0);

  // in characteristic 2 the square of z enters at the first level, and
  // membership persists upward
  auto first = frobenius_closure_probe(parse_polynomial("z^2", ring), linear, 4);
  REQUIRE(first.has_value());
  CHECK(*first == 1);
  for (std::uint32_t e = 1; e <= 4; ++e) {
    CHECK(frobenius_power(linear, e)
              .contains(parse_polynomial("z^2", ring).frobenius(e)));
  }
}

TEST_CASE("tight-closure witness search") {
  auto fermat = fermat_f2();
  IdealHandle linear = parse_ideal(fermat, {"x", "y"});
  RingPtr ring = fermat->ring();

  auto witness = tight_closure_witness_search(parse_polynomial("z^2", ring), linear, 4, 3);
  REQUIRE(witness.has_value());
  CHECK(*witness == Polynomial::constant(ring, 1));

  auto trivial = tight_closure_witness_search(parse_polynomial("x", ring), linear, 4, 3);
  REQUIRE(trivial.has_value());
  CHECK(*trivial == Polynomial::constant(ring, 1));

  // nothing of small degree multiplies 1 into every Frobenius power
  auto hopeless =
      tight_closure_witness_search(Polynomial::constant(ring, 1), linear, 4, 3);
  CHECK_FALSE(hopeless.has_value());
}

TEST_CASE("closure degree checks") {
  auto fermat = fermat_f2();
  IdealHandle linear = parse_ideal(fermat, {"x", "y"});
  CHECK(frobenius_closure_degree_check(linear, 3, 3));
  CHECK_FALSE(frobenius_closure_degree_check(linear, 2, 3));
  IdealHandle unit = parse_ideal(fermat, {"1"});
  CHECK(frobenius_closure_degree_check(unit, 0, 2));

  auto cone101 = cone(101);
  IdealHandle prime = parse_ideal(cone101, {"x", "z"});
  CHECK_THROWS_AS(frobenius_closure_degree_check(prime, 3, 2), MathError);
}

TEST_CASE("degree-data bound arithmetic") {
  BrennerBound cubic = brenner_bound(3, 1, 1, Rational(0));
  CHECK(cubic.alpha == Rational(2));
  CHECK(cubic.beta == Rational(1));

  BrennerBound line = brenner_bound(1, 2, 3, Rational(-1));
  CHECK(line.alpha == Rational(4));
  CHECK(line.beta == Rational(-1));

  BrennerBound degenerate = brenner_bound(2, 0, 0, Rational(7, 2));
  CHECK(degenerate.alpha == Rational(7, 2));
  CHECK(degenerate.beta == Rational(0));

  CHECK_THROWS_AS(brenner_bound(0, 1, 1, Rational(0)), MathError);
}

TEST_CASE("profiles can run on worker threads") {
  auto pres = plain(3, {"x", "y"});
  IdealHandle ideal = parse_ideal(pres, {"x*y", "x^3"});
  FrobeniusProfile serial = frobenius_profile(ideal, 3, 1);
  FrobeniusProfile threaded = frobenius_profile(ideal, 3, 4);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].h0_length == threaded.rows[i].h0_length);
    CHECK(serial.rows[i].ann_exp == threaded.rows[i].ann_exp);
    CHECK(serial.rows[i].ratio_hk == threaded.rows[i].ratio_hk);
  }
  CHECK(serial.b_hat == threaded.b_hat);
}
