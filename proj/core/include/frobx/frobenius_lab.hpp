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

#ifndef FROBX_FROBENIUS_LAB_HPP
#define FROBX_FROBENIUS_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobx/hilbert.hpp"
#include "frobx/rational.hpp"

namespace frobx {

/// a(J) = min{ a : m^a · H^0_m(R/J) = 0 }, exact. Computed from the
/// annihilator A = (J : J^sat): a = 0 when A is the unit ideal, otherwise
/// end(S/A) + 1 (in a standard graded ring m^a is everything in degrees
/// >= a, so m^a ⊆ A iff S/A vanishes from degree a on).
std::int64_t ann_exponent(const IdealHandle& ideal);

struct FrobeniusRow {
  std::uint32_t e = 0;
  std::int64_t q = 0;
  std::int64_t h0_length = 0;
  std::optional<std::int64_t> h0_end;       // nullopt = -infinity
  std::int64_t ann_exp = 0;                 // a(q)
  std::optional<std::int64_t> v;            // end(R/I^[q]) if finite colength
  Rational ratio_hk{0};                     // h0_length / q^dim
  std::optional<Rational> ratio_v;          // v / q
  std::optional<std::int64_t> trick_length; // element-trick cross-check, if requested
};

struct FrobeniusProfile {
  IdealHandle ideal;
  std::vector<FrobeniusRow> rows;  // e = 1..e_max, ascending
  std::int64_t b_hat = 0;          // max over all rows of ceil(a(q)/q); observed
  std::int64_t c_hat = 0;          // same max over the top half of the rows
  std::int64_t dim = 0;            // Krull dimension of R
};

/// One row per e = 1..e_max. Rows are independent and are computed by
/// `threads` workers (default 1); the assembled profile does not depend on
/// the completion order. An optional trick element adds the two-length
/// cross-check column.
FrobeniusProfile frobenius_profile(const IdealHandle& ideal, std::uint32_t e_max,
                                   unsigned threads = 1,
                                   const std::optional<Polynomial>& trick = std::nullopt);

struct EghkEstimate {
  std::vector<Rational> ratios;  // h0_length(e) / q^dim per row
  bool exact = false;            // last two ratios equal (polynomial-ring case)
  Rational value{0};             // the last ratio
};

/// Needs at least two rows.
EghkEstimate eghk_estimate(const FrobeniusProfile& profile);

enum class FamilyKind { Frobenius, Ordinary };

/// ℓ(H^0_m(R/I_k)) by the two-length trick: 2ℓ(R/(I_k+(s^w))) -
/// ℓ(R/(I_k+(s^{2w}))) where I_k and w follow the family (Frobenius:
/// I^[p^level], w = p^level; Ordinary: I^level, w = level). Both augmented
/// ideals must have finite colength — the computable certificate that s
/// avoids the nonmaximal associated primes. A negative outcome means the
/// element was invalid despite the certificate and raises MathError.
std::int64_t element_trick_length(const IdealHandle& ideal, const Polynomial& s,
                                  FamilyKind family, std::uint32_t level);

/// Searches homogeneous candidates (variables, then monomials, then short
/// random linear combinations, degrees <= degree_cap) for a trick element,
/// validated by the finite-colength test plus agreement with h0_summary at
/// the first family level. Throws MathError if the search is exhausted or
/// dim R/I = 0.
Polynomial find_trick_element(const IdealHandle& ideal, std::uint32_t degree_cap,
                              FamilyKind family = FamilyKind::Frobenius);

struct PowersRow {
  std::uint32_t n = 0;
  std::int64_t h0_length = 0;
  std::optional<std::int64_t> h0_end;
  std::int64_t ann_exp = 0;        // a_ord(n)
  std::int64_t alpha_sat = 0;      // alpha(sat(I^n))
  Rational ratio_alpha{0};         // alpha_sat / n
  Rational ratio_len{0};           // h0_length / n^dim
};

struct PowersProfile {
  IdealHandle ideal;
  bool symbolic = false;
  std::vector<PowersRow> rows;     // n = 1..n_max
  std::int64_t d_hat = 0;          // max over the top half of ceil(a_ord(n)/n)
  Rational waldschmidt_upper{0};   // min over rows of ratio_alpha
  std::int64_t dim = 0;
  std::vector<std::string> warnings;
};

/// Ordinary powers I^n for n = 1..n_max. With `symbolic` the caller
/// asserts that I is a dimension-one prime, making sat(I^n) the n-th
/// symbolic power; primality is trusted, but the profile warns when
/// dim R/I != 1 or sat(I) != I.
PowersProfile powers_profile(const IdealHandle& ideal, std::uint32_t n_max,
                             bool symbolic, unsigned threads = 1);

/// p^(n) = sat(p^n) for a (caller-asserted) prime of dimension one;
/// MathError when dim R/p != 1.
IdealHandle symbolic_power(const IdealHandle& prime, std::uint32_t n);

/// Per-row truth of (alpha_p + N - 1)/N <= alpha(I^(n))/n in exact
/// arithmetic. Requires a symbolic profile.
std::vector<bool> chudnovsky_check(const PowersProfile& profile, std::int64_t alpha_p,
                                   std::int64_t big_n);

struct ClosureReport {
  Polynomial element;
  IdealHandle ideal;
  std::uint32_t e_max = 0;
  /// Smallest e <= e_max with x^(p^e) in I^[p^e]; nullopt = none found.
  std::optional<std::uint32_t> frobenius_member;
  /// A multiplier c with c·x^q in I^[q] for all e = 1..e_max, if found.
  std::optional<Polynomial> tight_witness;
  std::uint32_t witness_verified_up_to = 0;
};

/// Frobenius-closure probe: smallest e in 0..e_max with x^q in I^[q].
std::optional<std::uint32_t> frobenius_closure_probe(const Polynomial& x,
                                                     const IdealHandle& ideal,
                                                     std::uint32_t e_max);

/// Enumerates homogeneous multipliers c (the constant 1 first, then
/// monomials and short combinations of degree 1..degree_cap), skipping
/// candidates that vanish in R, and returns the first c with c·x^q in
/// I^[q] for every e = 1..e_max. Evidence for x in I*, never a proof.
std::optional<Polynomial> tight_closure_witness_search(const Polynomial& x,
                                                       const IdealHandle& ideal,
                                                       std::uint32_t degree_cap,
                                                       std::uint32_t e_max);

/// Both probes bundled for reporting.
ClosureReport closure_report(const Polynomial& x, const IdealHandle& ideal,
                             std::uint32_t e_max, std::uint32_t witness_degree_cap);

/// True iff mu^(p^e) lies in I^[p^e] for every monomial mu of degree
/// exactly c that is nonzero in R, for every e = 0..e_max. Requires I of
/// finite colength.
bool frobenius_closure_degree_check(const IdealHandle& ideal, std::int64_t c,
                                    std::uint32_t e_max);

/// Degree-data bound for two-generated ideals on a degree-d plane curve:
/// alpha = d1 + d2 + e, beta = ((d-1)(d-2) - 2)/d + 1, as exact rationals.
struct BrennerBound {
  Rational alpha;
  Rational beta;
};
BrennerBound brenner_bound(std::int64_t d, std::int64_t d1, std::int64_t d2,
                           const Rational& excess);

}  // namespace frobx

#endif  // FROBX_FROBENIUS_LAB_HPP
