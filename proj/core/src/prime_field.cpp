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

#include "frobx/prime_field.hpp"

#include <string>

#include "frobx/errors.hpp"

namespace frobx {

namespace {
constexpr std::uint64_t kMaxModulus = (1ull << 31) - 1;
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p > kMaxModulus) {
    throw MathError("field modulus " + std::to_string(p) + " out of range [2, 2^31)");
  }
  if (!is_prime(p)) {
    throw MathError("field modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t n) const {
  Element base = a % p_;
  Element result = 1 % p_;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  a %= p_;
  if (a == 0) throw MathError("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PrimeField::Element PrimeField::reduce_decimal(std::string_view digits) const {
  Element acc = 0;
  for (char c : digits) {
    acc = add(mul(acc, 10 % p_), static_cast<Element>(c - '0') % p_);
  }
  return acc;
}

}  // namespace frobx
