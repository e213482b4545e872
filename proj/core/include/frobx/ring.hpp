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

#ifndef FROBX_RING_HPP
#define FROBX_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobx/prime_field.hpp"

namespace frobx {

enum class OrderKind { Grevlex, Lex, Block };

/// Monomial order tag. Block compares a leading group of `block` variables
/// first (grevlex inside each group); it is the elimination order used for
/// intersections and colons.
struct OrderSpec {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;  // size of the leading block (Block only)

  bool operator==(const OrderSpec&) const = default;
};

/// Ambient polynomial ring descriptor: prime field, ordered variable names,
/// monomial order. Every variable has weight 1 (standard grading).
/// Immutable; shared by all values built over it.
class Ring {
 public:
  /// Variable names must be unique, nonempty ASCII identifiers. Names
  /// starting with '@' are reserved for internally generated variables
  /// (they cannot be referenced from polynomial text).
  Ring(PrimeField field, std::vector<std::string> variables, OrderSpec order = {});

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const OrderSpec& order() const { return order_; }

  /// Same field, same variables, same order.
  bool operator==(const Ring& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  OrderSpec order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> variables,
                  OrderSpec order = {});

/// The ring [@t, vars...] over the same field, under the elimination order
/// with {@t} as the leading block. Used by intersection.
RingPtr extend_with_leading_variable(const RingPtr& ring, const std::string& fresh_name);

/// Exponent vector with cached total degree. Exponents stay below 2^31;
/// any operation that would exceed that throws MathError rather than wrap.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  static Monomial product(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  static Monomial quotient(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// Every exponent scaled by q (the Frobenius action on monomials).
  static Monomial power_scale(const Monomial& a, std::uint64_t q);

 private:
  std::vector<std::uint32_t> exps_;
  std::int64_t degree_;
};

/// Total order on monomials: negative / zero / positive as a < b / a = b /
/// a > b. All three kinds are multiplicative total orders with 1 minimal.
int compare(const Monomial& a, const Monomial& b, const OrderSpec& order);

}  // namespace frobx

#endif  // FROBX_RING_HPP
