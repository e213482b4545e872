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

#include <algorithm>
#include <random>

#include "frobx/errors.hpp"
#include "frobx/groebner.hpp"

using namespace frobx;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

// reducer with randomized divisor choice; must agree with normal_form
Polynomial scrambled_normal_form(const Polynomial& f, const GroebnerBasis& basis,
                                 std::mt19937& rng) {
  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    std::vector<const Polynomial*> options;
    for (const auto& g : basis.elements()) {
      if (g.leading_monomial().divides(lt.mono)) options.push_back(&g);
    }
    if (options.empty()) {
      remainder.push_back(lt);
      std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
      h = Polynomial::from_terms(f.ring(), std::move(rest));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const Polynomial* g = options[pick(rng)];
    Monomial shift = Monomial::quotient(lt.mono, g->leading_monomial());
    PrimeField::Element c =
        f.ring()->field().mul(lt.coeff, f.ring()->field().inv(g->leading_term().coeff));
    h = h - g->times_term(shift, c);
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

}  // namespace

TEST_CASE("reduced basis of the Fermat-cubic configuration") {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  GroebnerBasis basis = buchberger(ring, parse_all(ring, {"x^2", "y^2", "x^3+y^3+z^3"}));
  REQUIRE(basis.size() == 3);
  // ascending in grevlex: y^2 < x^2 < z^3
  CHECK(basis.elements()[0] == parse_polynomial("y^2", ring));
  CHECK(basis.elements()[1] == parse_polynomial("x^2", ring));
  CHECK(basis.elements()[2] == parse_polynomial("z^3", ring));
}

TEST_CASE("degenerate generating sets") {
  RingPtr ring = make_ring(5, {"x", "y"});
  GroebnerBasis principal = buchberger(ring, parse_all(ring, {"x^4"}));
  REQUIRE(principal.size() == 1);
  CHECK(principal.elements()[0] == parse_polynomial("x^4", ring));

  GroebnerBasis unit = buchberger(ring, parse_all(ring, {"3"}));
  CHECK(unit.is_unit_ideal());

  GroebnerBasis zero = buchberger(ring, {});
  CHECK(zero.is_zero_ideal());
  CHECK(buchberger(ring, {Polynomial::zero(ring)}) == zero);
}

TEST_CASE("normal forms against the cubic relation") {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  GroebnerBasis basis = buchberger(ring, parse_all(ring, {"x^2", "y^2", "x^3+y^3+z^3"}));
  CHECK(normal_form(parse_polynomial("z^3", ring), basis).is_zero());
  CHECK(normal_form(parse_polynomial("x^2", ring), basis).is_zero());
  CHECK_FALSE(normal_form(parse_polynomial("x*y*z^2", ring), basis).is_zero());
}

TEST_CASE("membership") {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  GroebnerBasis proper = buchberger(ring, parse_all(ring, {"x", "y"}));
  CHECK_FALSE(ideal_member(Polynomial::constant(ring, 1), proper));

  for (std::uint32_t e = 1; e <= 3; ++e) {
    std::uint32_t q = 1u << e;
    GroebnerBasis basis = buchberger(
        ring, parse_all(ring, {"x^" + std::to_string(q), "y^" + std::to_string(q),
                               "x^3+y^3+z^3"}));
    Polynomial survivor = parse_polynomial(
        "x^" + std::to_string(q - 1) + "*y^" + std::to_string(q - 1) + "*z^2", ring);
    CHECK_FALSE(ideal_member(survivor, basis));
  }
}

TEST_CASE("elimination computes intersections") {
  RingPtr ext = std::make_shared<Ring>(PrimeField(5), std::vector<std::string>{"t", "x", "y"},
                                       OrderSpec{OrderKind::Block, 1});
  GroebnerBasis basis = buchberger(ext, parse_all(ext, {"t*x", "y-t*y"}));
  auto kept = eliminate(basis, 1);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0] == parse_polynomial("x*y", ext));

  // dropping nothing returns the basis itself
  CHECK(eliminate(basis, 0) == basis.elements());

  // containment collapse: (x^2, xy) inside (x)
  GroebnerBasis nested = buchberger(ext, parse_all(ext, {"t*x^2", "t*x*y", "x-t*x"}));
  auto meet = eliminate(nested, 1);
  GroebnerBasis meet_basis = buchberger(ext, meet);
  CHECK(meet_basis == buchberger(ext, parse_all(ext, {"x^2", "x*y"})));

  // order mismatch is an error
  RingPtr plain = make_ring(5, {"t", "x", "y"});
  GroebnerBasis wrong = buchberger(plain, parse_all(plain, {"t*x"}));
  CHECK_THROWS_AS(eliminate(wrong, 1), MathError);
}

TEST_CASE("normal form is confluent") {
  std::mt19937 rng(4242);
  RingPtr ring = make_ring(7, {"x", "y", "z"});
  GroebnerBasis basis =
      buchberger(ring, parse_all(ring, {"x^2-y*z", "y^3-x*z", "z^2-x*y"}));
  std::uniform_int_distribution<std::uint32_t> exp_dist(0, 4);
  std::uniform_int_distribution<std::uint64_t> coeff_dist(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Term> terms;
    for (int t = 0; t < 5; ++t) {
      terms.push_back(
          Term{Monomial({exp_dist(rng), exp_dist(rng), exp_dist(rng)}), coeff_dist(rng)});
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    Polynomial reference = normal_form(f, basis);
    for (int run = 0; run < 3; ++run) {
      CHECK(scrambled_normal_form(f, basis, rng) == reference);
    }
  }
}

TEST_CASE("reduced basis is canonical across generating sets") {
  RingPtr ring = make_ring(3, {"x", "y"});
  auto gens = parse_all(ring, {"x*y", "x^3"});
  GroebnerBasis direct = buchberger(ring, gens);

  GroebnerBasis from_basis = buchberger(ring, direct.elements());
  CHECK(direct == from_basis);

  std::vector<Polynomial> padded = gens;
  padded.push_back(gens[0] * gens[1]);                                  // redundant product
  padded.push_back(gens[0] + gens[1] * parse_polynomial("x+2*y", ring));  // random combination
  std::reverse(padded.begin(), padded.end());
  CHECK(buchberger(ring, padded) == direct);
}

TEST_CASE("membership is closed under the ideal operations") {
  std::mt19937 rng(11);
  RingPtr ring = make_ring(5, {"x", "y", "z"});
  GroebnerBasis basis = buchberger(ring, parse_all(ring, {"x^2+y*z", "y^2-x*z"}));
  std::uniform_int_distribution<std::uint32_t> exp_dist(0, 2);
  std::uniform_int_distribution<std::uint64_t> coeff_dist(1, 4);
  auto random_member = [&] {
    std::vector<Term> terms;
    for (int t = 0; t < 3; ++t) {
      terms.push_back(
          Term{Monomial({exp_dist(rng), exp_dist(rng), exp_dist(rng)}), coeff_dist(rng)});
    }
    Polynomial h = Polynomial::from_terms(ring, std::move(terms));
    return h * basis.elements()[rng() % basis.size()];
  };
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = random_member();
    Polynomial g = random_member();
    CHECK(ideal_member(f, basis));
    CHECK(ideal_member(f + g, basis));
  }
}

TEST_CASE("leading-term ideal is stable across runs") {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  auto gens = parse_all(ring, {"x^4", "y^4", "x^3+y^3+z^3"});
  GroebnerBasis first = buchberger(ring, gens);
  GroebnerBasis second = buchberger(ring, gens);
  REQUIRE(first == second);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first.elements()[i].leading_monomial() == second.elements()[i].leading_monomial());
  }
}
