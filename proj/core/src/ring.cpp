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

#include "frobx/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

constexpr std::int64_t kMaxExponent = (1ll << 31) - 1;

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), tail);
}

}  // namespace

Ring::Ring(PrimeField field, std::vector<std::string> variables, OrderSpec order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  std::unordered_set<std::string_view> seen;
  for (const auto& v : vars_) {
    bool internal = !v.empty() && v.front() == '@';
    if (!internal && !is_identifier(v)) {
      throw MathError("variable name '" + v + "' is not an ASCII identifier");
    }
    if (internal && (v.size() < 2 || !is_identifier(std::string_view(v).substr(1)))) {
      throw MathError("bad internal variable name '" + v + "'");
    }
    if (!seen.insert(v).second) {
      throw MathError("duplicate variable name '" + v + "'");
    }
  }
  if (order_.kind == OrderKind::Block) {
    if (order_.block == 0 || order_.block >= vars_.size()) {
      throw MathError("block order needs a proper leading block");
    }
  }
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
  return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> variables, OrderSpec order) {
  return std::make_shared<Ring>(PrimeField(p), std::move(variables), order);
}

RingPtr extend_with_leading_variable(const RingPtr& ring, const std::string& fresh_name) {
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(fresh_name);
  for (const auto& v : ring->variables()) vars.push_back(v);
  return std::make_shared<Ring>(ring->field(), std::move(vars),
                                OrderSpec{OrderKind::Block, 1});
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)), degree_(0) {
  for (auto e : exps_) {
    if (e > kMaxExponent) throw MathError("monomial exponent overflow");
    degree_ += e;
  }
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = std::uint64_t(a.exps_[i]) + b.exps_[i];
    if (s > std::uint64_t(kMaxExponent)) throw MathError("monomial exponent overflow");
    e[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw InternalError("monomial quotient of a non-multiple");
    e[i] = a.exps_[i] - b.exps_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::power_scale(const Monomial& a, std::uint64_t q) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = std::uint64_t(a.exps_[i]) * q;
    if (s > std::uint64_t(kMaxExponent)) throw MathError("monomial exponent overflow");
    e[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(e));
}

namespace {

// Grevlex on the index range [lo, hi): higher total degree wins; on ties
// the *smaller* exponent in the last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const OrderSpec& order) {
  const std::size_t n = a.nvars();
  switch (order.kind) {
    case OrderKind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Lex:
      return lex_range(a, b, 0, n);
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, order.block);
      if (c != 0) return c;
      return grevlex_range(a, b, order.block, n);
    }
  }
  return 0;
}

}  // namespace frobx
