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

#include "frobx/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (*a.ring() == *b.ring()) return;
  throw MathError("polynomials belong to different rings");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, std::uint64_t value) {
  PrimeField::Element c = ring->field().reduce(value);
  if (c == 0) return zero(std::move(ring));
  std::vector<Term> terms{Term{Monomial(ring->nvars()), c}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::vector<std::uint32_t> e(ring->nvars(), 0);
  e.at(index) = 1;
  std::vector<Term> terms{Term{Monomial(std::move(e)), 1}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, std::uint64_t coeff) {
  PrimeField::Element c = ring->field().reduce(coeff);
  if (c == 0) return zero(std::move(ring));
  std::vector<Term> terms{Term{std::move(m), c}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const OrderSpec& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  const PrimeField& field = ring->field();
  for (auto& t : terms) {
    PrimeField::Element c = field.reduce(t.coeff);
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = field.add(merged.back().coeff, c);
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (c != 0) {
      merged.push_back(Term{std::move(t.mono), c});
    }
  }
  return Polynomial(std::move(ring), std::move(merged));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }

std::int64_t Polynomial::total_degree() const {
  if (terms_.empty()) throw InternalError("degree of the zero polynomial");
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(*this, other);
  const PrimeField& field = ring_->field();
  const OrderSpec& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = compare(terms_[i].mono, other.terms_[j].mono, ord);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      PrimeField::Element s = field.add(terms_[i].coeff, other.terms_[j].coeff);
      if (s != 0) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const PrimeField& field = ring_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field.neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::times_term(const Monomial& m, PrimeField::Element c) const {
  const PrimeField& field = ring_->field();
  c = field.reduce(c);
  if (c == 0) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back(Term{Monomial::product(t.mono, m), field.mul(t.coeff, c)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(PrimeField::Element c) const {
  return times_term(Monomial(ring_->nvars()), c);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(*this, other);
  if (is_zero() || other.is_zero()) return zero(ring_);
  const PrimeField& field = ring_->field();
  const OrderSpec& ord = ring_->order();
  auto desc = [&](const Monomial& a, const Monomial& b) { return compare(a, b, ord) > 0; };
  std::map<Monomial, PrimeField::Element, decltype(desc)> acc(desc);
  const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
  const Polynomial& big = terms_.size() <= other.terms_.size() ? other : *this;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      Monomial m = Monomial::product(s.mono, t.mono);
      PrimeField::Element c = field.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) {
        it->second = field.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(ring_ == other.ring_ || *ring_ == *other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    if (n >>= 1) base = base * base;
  }
  return result;
}

std::uint64_t frobenius_power_of(const PrimeField& field, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= field.modulus();
    if (q > (1ull << 31)) throw MathError("Frobenius power p^e out of range");
  }
  return q;
}

Polynomial Polynomial::frobenius(std::uint32_t e) const {
  std::uint64_t q = frobenius_power_of(ring_->field(), e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // c^q = c over F_p; monomials scale, which preserves the term order.
  for (const auto& t : terms_) out.push_back(Term{Monomial::power_scale(t.mono, q), t.coeff});
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    const Term& t = terms_[k];
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return out;
}

namespace {

// Hand-rolled tokenizer/parser for the small polynomial grammar.
class PolyParser {
 public:
  PolyParser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    Polynomial acc = parse_term(negate);
    skip_ws();
    while (pos_ < src_.size()) {
      char op = peek();
      if (op != '+' && op != '-') {
        fail("expected '+' or '-'");
      }
      ++pos_;
      acc = acc + parse_term(op == '-');
      skip_ws();
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why +
                     " in \"" + std::string(src_) + "\"");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool at_var_start() {
    skip_ws();
    char c = peek();
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }

  bool at_digit() {
    skip_ws();
    char c = peek();
    return c >= '0' && c <= '9';
  }

  std::string_view read_number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return src_.substr(start, pos_ - start);
  }

  std::uint64_t read_exponent() {
    std::string_view digits = read_number();
    if (digits.size() > 10) fail("exponent overflow");
    std::uint64_t v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    if (v > (1ull << 31) - 1) fail("exponent overflow");
    return v;
  }

  std::size_t read_variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
                (pos_ > start && c >= '0' && c <= '9');
      if (!ok) break;
      ++pos_;
    }
    if (start == pos_) fail("expected a variable");
    std::string_view name = src_.substr(start, pos_ - start);
    auto idx = ring_->variable_index(name);
    if (!idx) fail("undeclared variable '" + std::string(name) + "'");
    return *idx;
  }

  // factor := var ('^' uint)?; accumulates into the exponent vector.
  void parse_factor(std::vector<std::uint32_t>& exps) {
    std::size_t idx = read_variable();
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = read_exponent();
    }
    std::uint64_t total = exps[idx] + e;
    if (total > (1ull << 31) - 1) fail("exponent overflow");
    exps[idx] = static_cast<std::uint32_t>(total);
  }

  Polynomial parse_term(bool negate) {
    skip_ws();
    PrimeField::Element coeff = 1;
    bool saw_coeff = false;
    if (at_digit()) {
      coeff = ring_->field().reduce_decimal(read_number());
      saw_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        if (!at_var_start()) fail("expected a variable after '*'");
      }
    }
    std::vector<std::uint32_t> exps(ring_->nvars(), 0);
    bool saw_factor = false;
    while (at_var_start()) {
      parse_factor(exps);
      saw_factor = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        if (!at_var_start()) fail("expected a variable after '*'");
      }
    }
    if (!saw_coeff && !saw_factor) fail("expected a term");
    if (negate) coeff = ring_->field().neg(coeff);
    return Polynomial::from_monomial(ring_, Monomial(std::move(exps)), coeff);
  }

  std::string_view src_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
  const RingPtr& src = f.ring();
  if (src == target || *src == *target) return f;
  if (src->field().modulus() != target->field().modulus()) {
    throw MathError("cannot map a polynomial across different fields");
  }
  std::vector<std::optional<std::size_t>> where(src->nvars());
  for (std::size_t i = 0; i < src->nvars(); ++i) {
    where[i] = target->variable_index(src->variable(i));
  }
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < src->nvars(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!where[i]) throw MathError("variable '" + src->variable(i) + "' missing in target ring");
      exps[*where[i]] = e;
    }
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace frobx
