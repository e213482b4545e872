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

#include "frobx/groebner.hpp"

#include <algorithm>
#include <set>

#include "frobx/errors.hpp"

namespace frobx {

bool GroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_.front().leading_monomial().is_one();
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  if (!(ring_ == other.ring_ || *ring_ == *other.ring_)) return false;
  return elems_ == other.elems_;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* g = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lt.mono)) {
        g = &d;
        break;
      }
    }
    if (g != nullptr) {
      Monomial shift = Monomial::quotient(lt.mono, g->leading_monomial());
      PrimeField::Element c = field.mul(lt.coeff, field.inv(g->leading_term().coeff));
      h = h - g->times_term(shift, c);
    } else {
      remainder.push_back(lt);
      std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
      h = Polynomial::from_terms(ring, std::move(rest));
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, std::span<const Polynomial>(basis.elements()));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis).is_zero();
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

struct PairOrder {
  const OrderSpec* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = compare(a.lcm, b.lcm, *order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Engine {
 public:
  Engine(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), pairs_(PairOrder{&ring_->order()}) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      add(g.monic());
      if (unit_) break;
    }
  }

  GroebnerBasis run() {
    while (!unit_ && !pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = spoly(p);
      Polynomial r = normal_form(s, std::span<const Polynomial>(basis_));
      if (!r.is_zero()) add(r.monic());
    }
    return GroebnerBasis(ring_, interreduce());
  }

 private:
  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Monomial a = Monomial::quotient(p.lcm, f.leading_monomial());
    Monomial b = Monomial::quotient(p.lcm, g.leading_monomial());
    return f.times_term(a, 1) - g.times_term(b, 1);  // basis elements are monic
  }

  // Gebauer-Moeller update: queue the pairs with the new element, pruning
  // by the multiple, equal-lcm and coprime criteria, then drop old pairs
  // whose lcm is strictly absorbed by the newcomer.
  void add(Polynomial h) {
    if (h.leading_monomial().is_one()) {
      unit_ = true;
      basis_.clear();
      basis_.push_back(std::move(h));
      pairs_.clear();
      return;
    }
    std::size_t t = basis_.size();
    const Monomial& u = h.leading_monomial();

    std::vector<Pair> fresh;
    fresh.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      fresh.push_back(Pair{i, t, Monomial::lcm(basis_[i].leading_monomial(), u)});
    }
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm == fresh[a].lcm) {
          if (b < a) {  // keep the earliest of an equal-lcm family
            drop[a] = true;
            break;
          }
        } else if (fresh[b].lcm.divides(fresh[a].lcm)) {
          drop[a] = true;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      const Monomial& lmi = basis_[fresh[a].i].leading_monomial();
      if (Monomial::product(lmi, u) == fresh[a].lcm) drop[a] = true;  // coprime leads
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (u.divides(p.lcm) &&
          !(Monomial::lcm(basis_[p.i].leading_monomial(), u) == p.lcm) &&
          !(Monomial::lcm(basis_[p.j].leading_monomial(), u) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    basis_.push_back(std::move(h));
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a]) pairs_.insert(std::move(fresh[a]));
    }
  }

  // Minimalize leading terms, then fully reduce each survivor against the
  // others; the result is the unique reduced basis, sorted ascending.
  std::vector<Polynomial> interreduce() {
    std::vector<Polynomial> work = basis_;
    std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), ring_->order()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : work) {
      bool redundant = false;
      for (const auto& kept : minimal) {
        if (kept.leading_monomial().divides(g.leading_monomial())) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != k) others.push_back(minimal[j]);
      }
      Polynomial r = normal_form(minimal[k], std::span<const Polynomial>(others));
      if (r.is_zero()) throw InternalError("minimal basis element reduced to zero");
      reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), ring_->order()) < 0;
    });
    return reduced;
  }

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::set<Pair, PairOrder> pairs_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators) {
  for (const auto& g : generators) {
    if (!(g.ring() == ring || *g.ring() == *ring)) {
      throw MathError("generator belongs to a different ring");
    }
  }
  return Engine(ring, std::move(generators)).run();
}

std::vector<Polynomial> eliminate(const GroebnerBasis& basis, std::size_t drop_count) {
  if (drop_count == 0) return basis.elements();
  const OrderSpec& order = basis.ring()->order();
  if (order.kind != OrderKind::Block || order.block != drop_count) {
    throw MathError("elimination requires a block order with the dropped variables leading");
  }
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements()) {
    bool uses_dropped = false;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < drop_count && !uses_dropped; ++i) {
        if (t.mono.exponent(i) > 0) uses_dropped = true;
      }
      if (uses_dropped) break;
    }
    if (!uses_dropped) kept.push_back(g);
  }
  return kept;
}

}  // namespace frobx
