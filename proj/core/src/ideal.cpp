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

#include "frobx/ideal.hpp"

#include <algorithm>

#include "frobx/errors.hpp"
#include "frobx/hilbert.hpp"

namespace frobx {

QuotientPresentation::QuotientPresentation(RingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  graded_ = true;
  for (const auto& r : relations_) {
    if (!(r.ring() == ring_ || *r.ring() == *ring_)) {
      throw MathError("relation belongs to a different ring");
    }
    if (!r.is_homogeneous()) graded_ = false;
  }
}

const GroebnerBasis& QuotientPresentation::relations_basis() const {
  std::call_once(once_, [this] { basis_.emplace(buchberger(ring_, relations_)); });
  return *basis_;
}

bool QuotientPresentation::same_quotient(const QuotientPresentation& other) const {
  if (this == &other) return true;
  if (!(ring_ == other.ring_ || *ring_ == *other.ring_)) return false;
  return relations_basis() == other.relations_basis();
}

PresentationPtr make_presentation(RingPtr ring, std::vector<Polynomial> relations) {
  return std::make_shared<QuotientPresentation>(std::move(ring), std::move(relations));
}

IdealHandle::IdealHandle(PresentationPtr presentation, std::vector<Polynomial> generators)
    : state_(std::make_shared<State>()) {
  state_->presentation = std::move(presentation);
  for (const auto& g : generators) {
    if (!(g.ring() == state_->presentation->ring() ||
          *g.ring() == *state_->presentation->ring())) {
      throw MathError("generator belongs to a different ring");
    }
  }
  state_->generators = std::move(generators);
}

const GroebnerBasis& IdealHandle::basis() const {
  std::call_once(state_->once, [this] {
    std::vector<Polynomial> gens = state_->generators;
    const auto& rel = state_->presentation->relations();
    gens.insert(gens.end(), rel.begin(), rel.end());
    state_->basis.emplace(buchberger(state_->presentation->ring(), std::move(gens)));
  });
  return *state_->basis;
}

bool IdealHandle::is_homogeneous() const {
  for (const auto& g : basis().elements()) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  for (const auto& r : other.presentation()->relations()) {
    if (!contains(r)) return false;
  }
  return true;
}

IdealHandle parse_ideal(const PresentationPtr& pres, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, pres->ring()));
  return IdealHandle(pres, std::move(polys));
}

IdealHandle frobenius_power(const IdealHandle& ideal, std::uint32_t e) {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(e));
  return IdealHandle(ideal.presentation(), std::move(gens));
}

IdealHandle ordinary_power(const IdealHandle& ideal, std::uint32_t n) {
  if (n == 0) throw MathError("ordinary power requires n >= 1");
  const auto& gens = ideal.generators();
  std::vector<Polynomial> products;
  if (!gens.empty()) {
    // all multisets of size n over the generators
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      Polynomial prod = gens[pick[0]];
      for (std::uint32_t k = 1; k < n; ++k) prod = prod * gens[pick[k]];
      if (!prod.is_zero() &&
          std::find(products.begin(), products.end(), prod) == products.end()) {
        products.push_back(std::move(prod));
      }
      // next nondecreasing index tuple
      std::size_t pos = n;
      while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < n; ++k) pick[k] = pick[pos - 1];
    }
  }
  return IdealHandle(ideal.presentation(), std::move(products));
}

namespace {

// g / f for g a multiple of f; the division loop cannot leave a remainder
// over an integral domain when f | g.
Polynomial exact_quotient(const Polynomial& g, const Polynomial& f) {
  const RingPtr& ring = g.ring();
  const PrimeField& field = ring->field();
  PrimeField::Element lead_inv = field.inv(f.leading_term().coeff);
  std::vector<Term> quotient;
  Polynomial h = g;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!f.leading_monomial().divides(lt.mono)) {
      throw InternalError("exact division left a remainder");
    }
    Monomial shift = Monomial::quotient(lt.mono, f.leading_monomial());
    PrimeField::Element c = field.mul(lt.coeff, lead_inv);
    quotient.push_back(Term{shift, c});
    h = h - f.times_term(shift, c);
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

std::vector<Polynomial> preimage_generators(const IdealHandle& ideal) {
  std::vector<Polynomial> gens = ideal.generators();
  const auto& rel = ideal.presentation()->relations();
  gens.insert(gens.end(), rel.begin(), rel.end());
  return gens;
}

// Generators of A ∩ B as plain ideals of S, via t·A + (1-t)·B in S[t].
std::vector<Polynomial> intersect_raw(const RingPtr& ring, std::span<const Polynomial> a,
                                      std::span<const Polynomial> b) {
  RingPtr ext = extend_with_leading_variable(ring, "@t");
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.size() + b.size());
  for (const auto& g : a) gens.push_back(t * map_to_ring(g, ext));
  for (const auto& h : b) gens.push_back(one_minus_t * map_to_ring(h, ext));
  GroebnerBasis gb = buchberger(ext, std::move(gens));
  std::vector<Polynomial> kept = eliminate(gb, 1);
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& g : kept) out.push_back(map_to_ring(g, ring));
  return out;
}

}  // namespace

IdealHandle colon_element(const IdealHandle& ideal, const Polynomial& f) {
  if (f.is_zero()) throw MathError("colon by the zero element");
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> left = preimage_generators(ideal);
  std::vector<Polynomial> principal{f};
  std::vector<Polynomial> meet = intersect_raw(ring, left, principal);
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.size());
  for (const auto& g : meet) quotients.push_back(exact_quotient(g, f));
  return IdealHandle(ideal.presentation(), std::move(quotients));
}

IdealHandle colon_ideal(const IdealHandle& ideal, const IdealHandle& divisor) {
  std::vector<Polynomial> dgens = preimage_generators(divisor);
  std::erase_if(dgens, [](const Polynomial& g) { return g.is_zero(); });
  if (dgens.empty()) throw MathError("colon by the zero ideal");
  std::optional<IdealHandle> acc;
  for (const auto& g : dgens) {
    if (ideal.contains(g)) continue;  // (J : g) is the unit ideal
    IdealHandle part = colon_element(ideal, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  if (!acc) {
    // divisor ⊆ ideal, so the colon is everything
    return IdealHandle(ideal.presentation(), {Polynomial::constant(ideal.ring(), 1)});
  }
  return *acc;
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  if (!a.presentation()->same_quotient(*b.presentation())) {
    throw MathError("intersection requires ideals over the same quotient");
  }
  std::vector<Polynomial> left = preimage_generators(a);
  std::vector<Polynomial> right = preimage_generators(b);
  std::vector<Polynomial> meet = intersect_raw(a.ring(), left, right);
  return IdealHandle(a.presentation(), std::move(meet));
}

SaturationResult saturate_irrelevant(const IdealHandle& ideal) {
  constexpr int kIterationCap = 10000;
  const RingPtr& ring = ideal.ring();

  if (ideal.is_unit()) return {ideal, 0};
  if (has_finite_colength(ideal)) {
    // The ladder (J : m^k) grows strictly until it reaches the unit ideal,
    // which happens exactly at k = end(S/J) + 1.
    auto end = end_degree(ideal);
    IdealHandle unit(ideal.presentation(), {Polynomial::constant(ring, 1)});
    return {unit, end ? *end + 1 : 0};
  }

  IdealHandle current = ideal;
  for (int step = 0; step <= kIterationCap; ++step) {
    std::optional<IdealHandle> next;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      IdealHandle part = colon_element(current, Polynomial::variable(ring, i));
      next = next ? intersect(*next, part) : part;
    }
    if (*next == current) return {current, step};
    current = *next;
  }
  throw InternalError("saturation ladder exceeded the iteration cap");
}

}  // namespace frobx
