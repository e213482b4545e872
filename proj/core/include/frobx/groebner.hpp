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

#ifndef FROBX_GROEBNER_HPP
#define FROBX_GROEBNER_HPP

#include <span>
#include <vector>

#include "frobx/polynomial.hpp"

namespace frobx {

/// Reduced Groebner basis: every element monic and fully reduced against
/// the others, elements sorted ascending by leading monomial. The reduced
/// basis is unique per (ideal, order), so equality of ideals is equality
/// of these objects.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elems_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const;

  bool operator==(const GroebnerBasis& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
};

/// Remainder of f on division by the given polynomials (need not be a GB;
/// against a GB the result is the unique normal form). No term of the
/// result is divisible by any divisor's leading monomial, and f - result
/// lies in the ideal the divisors generate.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// True iff normal_form(f, basis) == 0.
bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with Gebauer-Moeller pair elimination; S-pairs
/// are processed smallest lcm degree first and the output is interreduced
/// to the unique reduced basis. Deterministic for a fixed input sequence.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators);

/// The basis elements containing none of the first `drop_count` variables —
/// a Groebner basis of the elimination ideal. The input basis must have
/// been computed under the Block order whose leading block is exactly those
/// variables (MathError otherwise); drop_count == 0 returns all elements.
std::vector<Polynomial> eliminate(const GroebnerBasis& basis, std::size_t drop_count);

}  // namespace frobx

#endif  // FROBX_GROEBNER_HPP
