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

#ifndef FROBX_PRIME_FIELD_HPP
#define FROBX_PRIME_FIELD_HPP

#include <cstdint>
#include <string_view>

namespace frobx {

/// Arithmetic in F_p for a prime 2 <= p < 2^31. Elements are plain uint64_t
/// residues kept in [0, p); products go through a 128-bit intermediate so
/// every operation is exact.
class PrimeField {
 public:
  using Element = std::uint64_t;

  /// Throws MathError unless p is prime and 2 <= p < 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element reduce(std::uint64_t a) const { return a % p_; }
  Element add(Element a, Element b) const {
    Element s = a + b;  // both < 2^31, no wraparound
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  /// a^n by square-and-multiply.
  Element pow(Element a, std::uint64_t n) const;
  /// Multiplicative inverse; throws MathError on zero.
  Element inv(Element a) const;

  /// Reduces an arbitrarily long decimal literal mod p (for the parser).
  Element reduce_decimal(std::string_view digits) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

  static bool is_prime(std::uint64_t n);

 private:
  std::uint64_t p_;
};

}  // namespace frobx

#endif  // FROBX_PRIME_FIELD_HPP
