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

#ifndef FROBX_POLYNOMIAL_HPP
#define FROBX_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "frobx/ring.hpp"

namespace frobx {

struct Term {
  Monomial mono;
  PrimeField::Element coeff;  // in [1, p): canonical terms never carry 0
};

/// Sparse multivariate polynomial over F_p in canonical form: terms sorted
/// strictly descending in the ring's order, no zero coefficients. Equal
/// polynomials have identical term sequences; the zero polynomial is the
/// empty sequence. Immutable in practice — all operations return new values.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, std::uint64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial from_monomial(RingPtr ring, Monomial m, std::uint64_t coeff = 1);
  /// Sorts, merges duplicates mod p and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const;

  /// Max total degree; requires a nonzero polynomial.
  std::int64_t total_degree() const;
  bool is_homogeneous() const;  // the zero polynomial is homogeneous

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const;

  /// this * c * m, reusing the term order (monomial orders are
  /// multiplicative, so no re-sort is needed).
  Polynomial times_term(const Monomial& m, PrimeField::Element c) const;
  Polynomial scaled(PrimeField::Element c) const;
  /// Leading coefficient 1.
  Polynomial monic() const;
  Polynomial pow(std::uint64_t n) const;

  /// f^(p^e), computed termwise: coefficients are fixed by Frobenius over
  /// F_p and exponents scale by q = p^e. Throws MathError on exponent
  /// overflow.
  Polynomial frobenius(std::uint32_t e) const;

  /// Canonical text form; parses back to the same value.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := uint | uint '*'? factors | factors
///   factors:= factor ('*'? factor)*
///   factor := var ('^' uint)?
/// with whitespace ignored, coefficients reduced mod p and exponents capped
/// at 2^31-1. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// q = p^e with an overflow check (q must stay below 2^31).
std::uint64_t frobenius_power_of(const PrimeField& field, std::uint32_t e);

/// Translates a polynomial into another ring that contains all variables
/// the polynomial actually uses (matched by name).
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

}  // namespace frobx

#endif  // FROBX_POLYNOMIAL_HPP
