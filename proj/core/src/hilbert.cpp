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

#include "frobx/hilbert.hpp"

#include <algorithm>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

using ZPoly = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in Hilbert data");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in Hilbert data");
  return r;
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
  trim(out);
  return out;
}

ZPoly subtract(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], -b[i]);
  trim(out);
  return out;
}

ZPoly shift(const ZPoly& a, std::size_t by) {
  if (a.empty()) return a;
  ZPoly out(a.size() + by, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + by] = a[i];
  return out;
}

// multiply by (1 - t^d)
ZPoly times_one_minus(const ZPoly& a, std::size_t d) {
  return subtract(a, shift(a, d));
}

// exact division by (1 - t): prefix sums; fails unless the value at t=1 is 0
std::optional<ZPoly> divide_one_minus(const ZPoly& a) {
  ZPoly out(a.size(), 0);
  std::int64_t run = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    run = checked_add(run, a[i]);
    out[i] = run;
  }
  if (run != 0) return std::nullopt;
  trim(out);
  return out;
}

bool is_pure_power(const Monomial& m) {
  int positive = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) > 0) ++positive;
  }
  return positive == 1;
}

// remove duplicates and non-minimal elements
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool covered = false;
    for (const auto& kept : out) {
      if (kept.divides(g)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(std::move(g));
  }
  return out;
}

// Numerator of a monomial ideal by pivot splitting:
//   N(M) = N(M + (x^e)) + t^e N(M : x^e)
// with the pivot x^e taken from a non-pure-power generator. Base cases are
// the empty ideal, the unit ideal and pure-power complete intersections.
ZPoly monomial_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  const Monomial* split = nullptr;
  for (const auto& g : gens) {
    if (!is_pure_power(g)) {
      split = &g;
      break;
    }
  }
  if (split == nullptr) {
    ZPoly out{1};
    for (const auto& g : gens) out = times_one_minus(out, static_cast<std::size_t>(g.degree()));
    return out;
  }
  std::size_t var = 0;
  std::uint32_t exp = 0;
  for (std::size_t i = 0; i < split->nvars(); ++i) {
    if (split->exponent(i) > exp) {
      exp = split->exponent(i);
      var = i;
    }
  }
  std::vector<std::uint32_t> pivot_exps(split->nvars(), 0);
  pivot_exps[var] = exp;
  Monomial pivot(std::move(pivot_exps));

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<std::uint32_t> e = g.exponents();
    e[var] = e[var] > exp ? e[var] - exp : 0;
    colon.push_back(Monomial(std::move(e)));
  }
  ZPoly left = monomial_numerator(std::move(with_pivot));
  ZPoly right = shift(monomial_numerator(std::move(colon)), exp);
  return add(left, right);
}

std::vector<Monomial> leading_monomials(const IdealHandle& ideal) {
  std::vector<Monomial> lms;
  lms.reserve(ideal.basis().size());
  for (const auto& g : ideal.basis().elements()) lms.push_back(g.leading_monomial());
  return lms;
}

// standard-monomial counting series, valid for arbitrary ideals
ZPoly counting_numerator(const IdealHandle& ideal) {
  if (ideal.is_unit()) return {};
  return monomial_numerator(leading_monomials(ideal));
}

void require_homogeneous(const IdealHandle& ideal, const char* what) {
  if (!ideal.presentation()->is_graded() || !ideal.is_homogeneous()) {
    throw MathError(std::string(what) + " requires a homogeneous ideal in a graded quotient");
  }
}

std::optional<ZPoly> quotient_dimensions(const HilbertNumerator& numerator, std::size_t nvars) {
  ZPoly d(numerator.coefficients);
  for (std::size_t i = 0; i < nvars; ++i) {
    auto next = divide_one_minus(d);
    if (!next) return std::nullopt;
    d = std::move(*next);
  }
  return d;
}

}  // namespace

HilbertNumerator hilbert_numerator(const IdealHandle& ideal) {
  require_homogeneous(ideal, "hilbert numerator");
  if (ideal.is_unit()) return HilbertNumerator{{}};
  return HilbertNumerator{monomial_numerator(leading_monomials(ideal))};
}

std::int64_t hilbert_dimension_at(const HilbertNumerator& numerator, std::size_t nvars,
                                  std::int64_t degree) {
  if (degree < 0) return 0;
  // coefficient of t^degree in N(t) / (1-t)^m
  std::int64_t total = 0;
  for (std::size_t k = 0; k < numerator.coefficients.size(); ++k) {
    std::int64_t d = degree - static_cast<std::int64_t>(k);
    if (d < 0) continue;
    // C(m-1+d, m-1)
    std::int64_t binom = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
      binom = checked_mul(binom, d + static_cast<std::int64_t>(i));
      binom /= static_cast<std::int64_t>(i);
    }
    total = checked_add(total, checked_mul(numerator.coefficients[k], binom));
  }
  return total;
}

std::optional<std::int64_t> krull_dimension(const IdealHandle& ideal) {
  require_homogeneous(ideal, "krull dimension");
  if (ideal.is_unit()) return std::nullopt;
  ZPoly n = hilbert_numerator(ideal).coefficients;
  std::int64_t multiplicity = 0;
  while (!n.empty()) {
    auto next = divide_one_minus(n);
    if (!next) break;
    n = std::move(*next);
    ++multiplicity;
  }
  return static_cast<std::int64_t>(ideal.ring()->nvars()) - multiplicity;
}

bool has_finite_colength(const IdealHandle& ideal) {
  if (ideal.is_unit()) return true;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<bool> covered(n, false);
  for (const auto& g : ideal.basis().elements()) {
    const Monomial& m = g.leading_monomial();
    if (is_pure_power(m)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m.exponent(i) > 0) covered[i] = true;
      }
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::int64_t length_of_quotient(const IdealHandle& ideal) {
  if (ideal.is_unit()) return 0;
  if (!has_finite_colength(ideal)) {
    throw MathError("length is undefined: the quotient has positive dimension");
  }
  auto dims = quotient_dimensions(HilbertNumerator{counting_numerator(ideal)},
                                  ideal.ring()->nvars());
  if (!dims) throw InternalError("finite-colength quotient with non-polynomial series");
  std::int64_t total = 0;
  for (auto c : *dims) total = checked_add(total, c);
  return total;
}

std::optional<std::int64_t> end_degree(const IdealHandle& ideal) {
  if (ideal.is_unit()) return std::nullopt;
  if (!has_finite_colength(ideal)) {
    throw MathError("end degree is undefined: the quotient has positive dimension");
  }
  auto dims = quotient_dimensions(HilbertNumerator{counting_numerator(ideal)},
                                  ideal.ring()->nvars());
  if (!dims) throw InternalError("finite-colength quotient with non-polynomial series");
  if (dims->empty()) return std::nullopt;
  return static_cast<std::int64_t>(dims->size()) - 1;
}

std::vector<std::int64_t> standard_monomial_difference(const IdealHandle& inner,
                                                       const IdealHandle& outer) {
  if (!outer.contains(inner)) {
    throw MathError("standard-monomial difference requires nested ideals");
  }
  ZPoly diff = subtract(counting_numerator(inner), counting_numerator(outer));
  for (std::size_t i = 0; i < inner.ring()->nvars(); ++i) {
    auto next = divide_one_minus(diff);
    if (!next) throw MathError("the quotient of the ideals is not finite-dimensional");
    diff = std::move(*next);
  }
  for (auto c : diff) {
    if (c < 0) throw InternalError("negative coefficient in a standard-monomial difference");
  }
  return diff;
}

std::int64_t alpha(const IdealHandle& ideal) {
  require_homogeneous(ideal, "alpha");
  const GroebnerBasis& q_basis = ideal.presentation()->relations_basis();
  std::optional<std::int64_t> least;
  for (const auto& g : ideal.basis().elements()) {
    if (ideal_member(g, q_basis)) continue;
    std::int64_t d = g.total_degree();
    if (!least || d < *least) least = d;
  }
  if (!least) throw MathError("alpha is undefined for the zero ideal of the quotient");
  return *least;
}

H0Summary h0_summary(const IdealHandle& ideal) {
  require_homogeneous(ideal, "H0 summary");
  SaturationResult sat = saturate_irrelevant(ideal);
  H0Summary out{0, std::nullopt, {}, sat.saturation, sat.stabilization_step};
  out.diff = standard_monomial_difference(ideal, sat.saturation);
  for (auto c : out.diff) out.length = checked_add(out.length, c);
  if (!out.diff.empty()) out.end = static_cast<std::int64_t>(out.diff.size()) - 1;
  return out;
}

}  // namespace frobx
