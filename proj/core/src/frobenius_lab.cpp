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

#include "frobx/frobenius_lab.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "frobx/errors.hpp"

namespace frobx {

namespace {

std::int64_t checked_ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw MathError("ratio denominator overflow");
  }
  return r;
}

std::int64_t ring_dimension(const IdealHandle& ideal) {
  IdealHandle zero(ideal.presentation(), {});
  auto dim = krull_dimension(zero);
  if (!dim) throw MathError("the quotient ring is the zero ring");
  return *dim;
}

std::int64_t ann_exponent_with(const IdealHandle& ideal, const IdealHandle& saturation) {
  if (saturation == ideal) return 0;  // H0 vanishes
  IdealHandle annihilator = colon_ideal(ideal, saturation);
  if (annihilator.is_unit()) return 0;
  if (!has_finite_colength(annihilator)) {
    throw InternalError("annihilator of H0 is not primary to the irrelevant ideal");
  }
  auto end = end_degree(annihilator);
  if (!end) throw InternalError("annihilator of a nonzero H0 is the unit ideal");
  return *end + 1;
}

void run_rows(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::int64_t tail_start(std::size_t rows) { return static_cast<std::int64_t>(rows / 2); }

bool nonzero_in_quotient(const Polynomial& f, const IdealHandle& any_ideal) {
  return !ideal_member(f, any_ideal.presentation()->relations_basis());
}

// Homogeneous candidates for searches: variables and monomials by degree,
// then a few deterministic short combinations per degree.
std::vector<Polynomial> monomials_of_degree(const RingPtr& ring, std::uint32_t degree) {
  std::vector<Polynomial> out;
  std::vector<std::uint32_t> exps(ring->nvars(), 0);
  // lexicographic enumeration of compositions of `degree`
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == ring->nvars()) {
      exps[var] = left;
      out.push_back(Polynomial::from_monomial(ring, Monomial(exps)));
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace

std::int64_t ann_exponent(const IdealHandle& ideal) {
  if (!ideal.presentation()->is_graded() || !ideal.is_homogeneous()) {
    throw MathError("annihilation exponent requires a homogeneous ideal");
  }
  SaturationResult sat = saturate_irrelevant(ideal);
  return ann_exponent_with(ideal, sat.saturation);
}

FrobeniusProfile frobenius_profile(const IdealHandle& ideal, std::uint32_t e_max,
                                   unsigned threads, const std::optional<Polynomial>& trick) {
  if (e_max < 1) throw MathError("frobenius profile requires e_max >= 1");
  if (!ideal.presentation()->is_graded() || !ideal.is_homogeneous()) {
    throw MathError("frobenius profile requires a homogeneous ideal");
  }
  std::int64_t dim = ring_dimension(ideal);
  FrobeniusProfile profile{ideal, std::vector<FrobeniusRow>(e_max), 0, 0, dim};

  run_rows(e_max, threads, [&](std::size_t idx) {
    std::uint32_t e = static_cast<std::uint32_t>(idx) + 1;
    IdealHandle power = frobenius_power(ideal, e);
    std::int64_t q =
        static_cast<std::int64_t>(frobenius_power_of(ideal.ring()->field(), e));
    FrobeniusRow row;
    row.e = e;
    row.q = q;
    H0Summary h0 = h0_summary(power);
    row.h0_length = h0.length;
    row.h0_end = h0.end;
    row.ann_exp = ann_exponent_with(power, h0.saturation);
    if (has_finite_colength(power)) {
      row.v = end_degree(power);
      if (row.v) row.ratio_v = Rational(*row.v, q);
    }
    row.ratio_hk = Rational(row.h0_length, checked_ipow(q, dim));
    if (trick) row.trick_length = element_trick_length(ideal, *trick, FamilyKind::Frobenius, e);
    profile.rows[idx] = std::move(row);
  });

  for (std::size_t i = 0; i < profile.rows.size(); ++i) {
    const FrobeniusRow& row = profile.rows[i];
    std::int64_t scaled = row.ann_exp == 0 ? 0 : ceil_div(row.ann_exp, row.q);
    profile.b_hat = std::max(profile.b_hat, scaled);
    if (static_cast<std::int64_t>(i) >= tail_start(profile.rows.size())) {
      profile.c_hat = std::max(profile.c_hat, scaled);
    }
  }
  return profile;
}

EghkEstimate eghk_estimate(const FrobeniusProfile& profile) {
  if (profile.rows.size() < 2) {
    throw MathError("the multiplicity estimate needs at least two rows");
  }
  EghkEstimate out;
  for (const auto& row : profile.rows) out.ratios.push_back(row.ratio_hk);
  out.value = out.ratios.back();
  out.exact = out.ratios[out.ratios.size() - 1] == out.ratios[out.ratios.size() - 2];
  return out;
}

std::int64_t element_trick_length(const IdealHandle& ideal, const Polynomial& s,
                                  FamilyKind family, std::uint32_t level) {
  if (!s.is_homogeneous() || s.is_zero() || !nonzero_in_quotient(s, ideal)) {
    throw MathError("trick element must be homogeneous and nonzero in the quotient");
  }
  if (level < 1) throw MathError("trick level must be at least 1");
  IdealHandle power = family == FamilyKind::Frobenius ? frobenius_power(ideal, level)
                                                      : ordinary_power(ideal, level);
  Polynomial s_w = family == FamilyKind::Frobenius ? s.frobenius(level) : s.pow(level);
  Polynomial s_2w = s_w * s_w;

  auto augmented = [&](const Polynomial& extra) {
    std::vector<Polynomial> gens = power.generators();
    gens.push_back(extra);
    return IdealHandle(ideal.presentation(), std::move(gens));
  };
  IdealHandle first = augmented(s_w);
  IdealHandle second = augmented(s_2w);
  if (!has_finite_colength(first) || !has_finite_colength(second)) {
    throw MathError("trick element fails the finite-colength certificate");
  }
  std::int64_t result = 2 * length_of_quotient(first) - length_of_quotient(second);
  if (result < 0) {
    throw MathError("trick element produced a negative length; element rejected");
  }
  return result;
}

Polynomial find_trick_element(const IdealHandle& ideal, std::uint32_t degree_cap,
                              FamilyKind family) {
  if (ideal.is_unit() || has_finite_colength(ideal)) {
    throw MathError("trick-element search requires dim R/I >= 1");
  }
  const RingPtr& ring = ideal.ring();
  IdealHandle level_one = family == FamilyKind::Frobenius ? frobenius_power(ideal, 1)
                                                          : ordinary_power(ideal, 1);
  IdealHandle level_one_sat = saturate_irrelevant(level_one).saturation;
  std::int64_t target = 0;
  for (auto c : standard_monomial_difference(level_one, level_one_sat)) target += c;

  auto validate = [&](const Polynomial& s) -> bool {
    if (s.is_zero() || !nonzero_in_quotient(s, ideal)) return false;
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(s);
    if (!has_finite_colength(IdealHandle(ideal.presentation(), std::move(gens)))) return false;
    try {
      return element_trick_length(ideal, s, family, 1) == target;
    } catch (const MathError&) {
      return false;
    }
  };

  std::vector<Polynomial> candidates;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    candidates.push_back(Polynomial::variable(ring, i));
  }
  for (std::uint32_t d = 2; d <= degree_cap; ++d) {
    auto monos = monomials_of_degree(ring, d);
    candidates.insert(candidates.end(), monos.begin(), monos.end());
  }
  // deterministic fallback: short random combinations per degree
  std::mt19937 rng(0x5eed0001u);
  for (std::uint32_t d = 1; d <= degree_cap; ++d) {
    auto monos = monomials_of_degree(ring, d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<std::uint64_t> coeff(1, ring->field().modulus() - 1);
    for (int trial = 0; trial < 16; ++trial) {
      Polynomial combo = Polynomial::zero(ring);
      for (int term = 0; term < 3; ++term) {
        combo = combo + monos[pick(rng)].scaled(ring->field().reduce(coeff(rng)));
      }
      if (!combo.is_zero()) candidates.push_back(combo);
    }
  }
  for (const auto& s : candidates) {
    if (validate(s)) return s;
  }
  throw MathError("no valid trick element found within the degree cap");
}

PowersProfile powers_profile(const IdealHandle& ideal, std::uint32_t n_max, bool symbolic,
                             unsigned threads) {
  if (n_max < 1) throw MathError("powers profile requires n_max >= 1");
  if (!ideal.presentation()->is_graded() || !ideal.is_homogeneous()) {
    throw MathError("powers profile requires a homogeneous ideal");
  }
  std::int64_t dim = ring_dimension(ideal);
  PowersProfile profile{ideal, symbolic, std::vector<PowersRow>(n_max), 0, Rational(0), dim, {}};

  if (symbolic) {
    auto qdim = krull_dimension(ideal);
    if (!qdim || *qdim != 1) {
      profile.warnings.push_back("symbolic mode: dim R/I != 1, sat(I^n) need not be I^(n)");
    }
    SaturationResult sat = saturate_irrelevant(ideal);
    if (!(sat.saturation == ideal)) {
      profile.warnings.push_back("symbolic mode: I is not saturated, primality assertion suspect");
    }
  }

  run_rows(n_max, threads, [&](std::size_t idx) {
    std::uint32_t n = static_cast<std::uint32_t>(idx) + 1;
    IdealHandle power = ordinary_power(ideal, n);
    PowersRow row;
    row.n = n;
    H0Summary h0 = h0_summary(power);
    row.h0_length = h0.length;
    row.h0_end = h0.end;
    row.ann_exp = ann_exponent_with(power, h0.saturation);
    row.alpha_sat = alpha(h0.saturation);
    row.ratio_alpha = Rational(row.alpha_sat, n);
    row.ratio_len = Rational(row.h0_length, checked_ipow(n, dim));
    profile.rows[idx] = std::move(row);
  });

  profile.waldschmidt_upper = profile.rows.front().ratio_alpha;
  for (std::size_t i = 0; i < profile.rows.size(); ++i) {
    const PowersRow& row = profile.rows[i];
    profile.waldschmidt_upper = std::min(profile.waldschmidt_upper, row.ratio_alpha);
    std::int64_t scaled = row.ann_exp == 0 ? 0 : ceil_div(row.ann_exp, row.n);
    if (static_cast<std::int64_t>(i) >= tail_start(profile.rows.size())) {
      profile.d_hat = std::max(profile.d_hat, scaled);
    }
  }
  return profile;
}

IdealHandle symbolic_power(const IdealHandle& prime, std::uint32_t n) {
  auto dim = krull_dimension(prime);
  if (!dim || *dim != 1) {
    throw MathError("symbolic powers via saturation need a dimension-one prime");
  }
  return saturate_irrelevant(ordinary_power(prime, n)).saturation;
}

std::vector<bool> chudnovsky_check(const PowersProfile& profile, std::int64_t alpha_p,
                                   std::int64_t big_n) {
  if (!profile.symbolic) throw MathError("the containment check needs a symbolic profile");
  if (big_n < 1) throw MathError("the ambient dimension must be positive");
  Rational lhs(alpha_p + big_n - 1, big_n);
  std::vector<bool> out;
  out.reserve(profile.rows.size());
  for (const auto& row : profile.rows) out.push_back(lhs <= row.ratio_alpha);
  return out;
}

std::optional<std::uint32_t> frobenius_closure_probe(const Polynomial& x,
                                                     const IdealHandle& ideal,
                                                     std::uint32_t e_max) {
  if (!x.is_homogeneous()) throw MathError("closure probe requires a homogeneous element");
  for (std::uint32_t e = 0; e <= e_max; ++e) {
    if (frobenius_power(ideal, e).contains(x.frobenius(e))) return e;
  }
  return std::nullopt;
}

std::optional<Polynomial> tight_closure_witness_search(const Polynomial& x,
                                                       const IdealHandle& ideal,
                                                       std::uint32_t degree_cap,
                                                       std::uint32_t e_max) {
  if (!x.is_homogeneous()) throw MathError("witness search requires a homogeneous element");
  const RingPtr& ring = ideal.ring();
  std::vector<IdealHandle> powers;
  std::vector<Polynomial> x_powers;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    powers.push_back(frobenius_power(ideal, e));
    x_powers.push_back(x.frobenius(e));
  }
  auto passes = [&](const Polynomial& c) {
    if (c.is_zero() || !nonzero_in_quotient(c, ideal)) return false;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (!powers[i].contains(c * x_powers[i])) return false;
    }
    return true;
  };
  Polynomial one = Polynomial::constant(ring, 1);
  if (passes(one)) return one;
  for (std::uint32_t d = 1; d <= degree_cap; ++d) {
    auto monos = monomials_of_degree(ring, d);
    for (const auto& c : monos) {
      if (passes(c)) return c;
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (std::size_t j = i + 1; j < monos.size(); ++j) {
        Polynomial c = monos[i] + monos[j];
        if (passes(c)) return c;
      }
    }
  }
  return std::nullopt;
}

ClosureReport closure_report(const Polynomial& x, const IdealHandle& ideal, std::uint32_t e_max,
                             std::uint32_t witness_degree_cap) {
  ClosureReport report{x, ideal, e_max, std::nullopt, std::nullopt, 0};
  report.frobenius_member = frobenius_closure_probe(x, ideal, e_max);
  report.tight_witness = tight_closure_witness_search(x, ideal, witness_degree_cap, e_max);
  if (report.tight_witness) report.witness_verified_up_to = e_max;
  return report;
}

bool frobenius_closure_degree_check(const IdealHandle& ideal, std::int64_t c,
                                    std::uint32_t e_max) {
  if (!has_finite_colength(ideal)) {
    throw MathError("degree check requires an ideal primary to the irrelevant ideal");
  }
  if (c < 0) throw MathError("degree bound must be nonnegative");
  std::vector<IdealHandle> powers;
  for (std::uint32_t e = 0; e <= e_max; ++e) powers.push_back(frobenius_power(ideal, e));
  for (const auto& mu : monomials_of_degree(ideal.ring(), static_cast<std::uint32_t>(c))) {
    if (!nonzero_in_quotient(mu, ideal)) continue;
    for (std::uint32_t e = 0; e <= e_max; ++e) {
      if (!powers[e].contains(mu.frobenius(e))) return false;
    }
  }
  return true;
}

BrennerBound brenner_bound(std::int64_t d, std::int64_t d1, std::int64_t d2,
                           const Rational& excess) {
  if (d < 1) throw MathError("curve degree must be positive");
  BrennerBound out{Rational(d1 + d2) + excess, Rational((d - 1) * (d - 2) - 2, d) + Rational(1)};
  return out;
}

}  // namespace frobx
