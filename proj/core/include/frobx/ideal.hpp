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

#ifndef FROBX_IDEAL_HPP
#define FROBX_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "frobx/groebner.hpp"

namespace frobx {

/// R = S/Q, given by the ambient ring S and generators of Q. An empty
/// relation list presents S itself. Graded operations require every
/// relation to be homogeneous; membership-style operations do not.
class QuotientPresentation {
 public:
  QuotientPresentation(RingPtr ring, std::vector<Polynomial> relations);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// All listed relations homogeneous under the standard grading.
  bool is_graded() const { return graded_; }
  /// Reduced GB of Q (computed once, thread-safe).
  const GroebnerBasis& relations_basis() const;

  /// Same ambient ring and same relation ideal (reduced-GB equality).
  bool same_quotient(const QuotientPresentation& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  bool graded_;
  mutable std::once_flag once_;
  mutable std::optional<GroebnerBasis> basis_;
};

using PresentationPtr = std::shared_ptr<const QuotientPresentation>;

PresentationPtr make_presentation(RingPtr ring, std::vector<Polynomial> relations = {});

/// An ideal of R = S/Q, represented by its full preimage in S: the listed
/// generators together with the relations. The reduced Groebner basis of
/// that preimage is the canonical form; it is computed lazily, at most
/// once, and shared by all copies of the handle. Handles are immutable
/// values and safe to use from concurrent workers.
class IdealHandle {
 public:
  IdealHandle(PresentationPtr presentation, std::vector<Polynomial> generators);

  const PresentationPtr& presentation() const { return state_->presentation; }
  const RingPtr& ring() const { return state_->presentation->ring(); }
  const std::vector<Polynomial>& generators() const { return state_->generators; }

  /// Reduced GB of (generators) + Q in S.
  const GroebnerBasis& basis() const;

  /// The ideal is homogeneous (decided on the reduced basis, so any
  /// generating set of a homogeneous ideal qualifies).
  bool is_homogeneous() const;
  bool is_unit() const { return basis().is_unit_ideal(); }
  bool contains(const Polynomial& f) const { return ideal_member(f, basis()); }
  bool contains(const IdealHandle& other) const;

  /// Equality of ideals: equality of reduced bases.
  bool operator==(const IdealHandle& other) const { return basis() == other.basis(); }

 private:
  struct State {
    PresentationPtr presentation;
    std::vector<Polynomial> generators;
    mutable std::once_flag once;
    mutable std::optional<GroebnerBasis> basis;
  };
  std::shared_ptr<State> state_;
};

/// Convenience: parse generator strings in the presentation's ring.
IdealHandle parse_ideal(const PresentationPtr& pres, const std::vector<std::string>& gens);

/// I^[p^e]: the ideal generated by the q-th powers of the listed
/// generators (plus the relations). Independent of the generating set.
IdealHandle frobenius_power(const IdealHandle& ideal, std::uint32_t e);

/// I^n: generated by all n-fold products of the listed generators.
IdealHandle ordinary_power(const IdealHandle& ideal, std::uint32_t n);

/// (J : f) = { g : g*f in J }. Computed exactly as (J ∩ (f)) / f; throws
/// MathError for f = 0.
IdealHandle colon_element(const IdealHandle& ideal, const Polynomial& f);

/// (J : K), the intersection of (J : k) over the generators of K's
/// preimage. Throws MathError when K is the zero ideal.
IdealHandle colon_ideal(const IdealHandle& ideal, const IdealHandle& divisor);

/// J ∩ K via the fresh-variable trick: eliminate t from t·J + (1-t)·K.
/// Both handles must share the presentation.
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);

struct SaturationResult {
  IdealHandle saturation;
  std::int64_t stabilization_step;  // first k with (J : m^k) = (J : m^{k+1})
};

/// J^sat = ∪_t (J : m^t) with m the irrelevant ideal of R, computed by the
/// ladder J_{k+1} = ∩_i (J_k : x_i) until the reduced basis stabilizes.
/// Finite-colength inputs short-circuit to the unit ideal with the same
/// certified step. An iteration cap of 10^4 guards against bugs.
SaturationResult saturate_irrelevant(const IdealHandle& ideal);

}  // namespace frobx

#endif  // FROBX_IDEAL_HPP
