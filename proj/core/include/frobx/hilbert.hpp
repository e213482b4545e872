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

#ifndef FROBX_HILBERT_HPP
#define FROBX_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "frobx/ideal.hpp"

namespace frobx {

/// Integer numerator N(t) with HS(S/J) = N(t) / (1-t)^m, m = nvars(S).
/// coefficients[d] is the coefficient of t^d; trailing zeros are trimmed
/// and the zero ring has an empty list (the N = 0 convention).
struct HilbertNumerator {
  std::vector<std::int64_t> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  std::int64_t at(std::size_t d) const {
    return d < coefficients.size() ? coefficients[d] : 0;
  }
  bool operator==(const HilbertNumerator&) const = default;
};

/// From the leading-term ideal of J's reduced basis, by recursive pivot
/// splitting on the minimal monomial generators. Requires homogeneous J.
HilbertNumerator hilbert_numerator(const IdealHandle& ideal);

/// dim_k (S/J)_d, expanded from the numerator.
std::int64_t hilbert_dimension_at(const HilbertNumerator& numerator, std::size_t nvars,
                                  std::int64_t degree);

/// Krull dimension of S/J = m - (multiplicity of t = 1 in N). The unit
/// ideal (zero ring) yields nullopt, reported as -infinity downstream.
std::optional<std::int64_t> krull_dimension(const IdealHandle& ideal);

/// The leading-term ideal contains a pure power of every variable — the
/// combinatorial finite-colength test.
bool has_finite_colength(const IdealHandle& ideal);

/// Number of standard monomials of S/J; requires finite colength. Valid
/// for arbitrary (not necessarily homogeneous) ideals: the standard
/// monomials are a vector-space basis of the quotient.
std::int64_t length_of_quotient(const IdealHandle& ideal);

/// Largest d with (S/J)_d != 0; requires finite colength. nullopt is the
/// minus-infinity marker (zero ring).
std::optional<std::int64_t> end_degree(const IdealHandle& ideal);

/// Degree-indexed count of standard monomials of `inner` minus those of
/// `outer`, for inner ⊆ outer with finite-dimensional quotient. Under a
/// degree-compatible order this equals the dimension of outer/inner per
/// filtration degree for arbitrary ideals; the coefficient sum is
/// dim_k(outer/inner).
std::vector<std::int64_t> standard_monomial_difference(const IdealHandle& inner,
                                                       const IdealHandle& outer);

/// alpha(J) = min{ d : J_d strictly contains Q_d }: the least degree of a
/// reduced-basis element of J outside Q. Throws MathError when J equals
/// the zero ideal of R.
std::int64_t alpha(const IdealHandle& ideal);

/// H^0_m(R/J) = J^sat / J presented by its Hilbert-difference polynomial
/// D(t) = sum_d dim(J^sat/J)_d t^d. end is nullopt iff the module is zero.
struct H0Summary {
  std::int64_t length = 0;
  std::optional<std::int64_t> end;
  std::vector<std::int64_t> diff;  // D(t); nonnegative coefficients
  IdealHandle saturation;
  std::int64_t saturation_step = 0;
};

/// Computes J^sat, both numerators and D = (N_J - N_sat)/(1-t)^m by exact
/// division. Inexact division or a negative coefficient would contradict
/// H^0 being finite length and raises InternalError.
H0Summary h0_summary(const IdealHandle& ideal);

}  // namespace frobx

#endif  // FROBX_HILBERT_HPP
