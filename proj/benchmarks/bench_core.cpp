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

#include <benchmark/benchmark.h>

#include "frobx/frobenius_lab.hpp"

namespace {

using namespace frobx;

PresentationPtr fermat_f2() {
  RingPtr ring = make_ring(2, {"x", "y", "z"});
  return make_presentation(ring, {parse_polynomial("x^3+y^3+z^3", ring)});
}

void BM_Buchberger_FermatFrobenius(benchmark::State& state) {
  auto pres = fermat_f2();
  std::uint32_t e = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    IdealHandle power = frobenius_power(parse_ideal(pres, {"x", "y"}), e);
    benchmark::DoNotOptimize(power.basis().size());
  }
}
BENCHMARK(BM_Buchberger_FermatFrobenius)->Arg(2)->Arg(4);

void BM_HilbertLength(benchmark::State& state) {
  RingPtr ring = make_ring(2, {"x", "y", "t"});
  auto pres = make_presentation(ring, {parse_polynomial("x^3+t*x*y+y^3", ring)});
  std::uint32_t e = static_cast<std::uint32_t>(state.range(0));
  std::string q = std::to_string(1u << e);
  IdealHandle ideal = parse_ideal(pres, {"x^" + q, "y^" + q, "t^" + q});
  ideal.basis();  // exclude the one-time basis computation
  for (auto _ : state) {
    benchmark::DoNotOptimize(length_of_quotient(ideal));
  }
}
BENCHMARK(BM_HilbertLength)->Arg(3)->Arg(5);

void BM_SaturationLadder(benchmark::State& state) {
  auto pres = make_presentation(make_ring(3, {"x", "y"}));
  std::uint32_t e = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    IdealHandle power = frobenius_power(parse_ideal(pres, {"x*y", "x^3"}), e);
    benchmark::DoNotOptimize(saturate_irrelevant(power).stabilization_step);
  }
}
BENCHMARK(BM_SaturationLadder)->Arg(1)->Arg(2);

void BM_FrobeniusProfileRow(benchmark::State& state) {
  auto pres = fermat_f2();
  IdealHandle ideal = parse_ideal(pres, {"x", "y"});
  for (auto _ : state) {
    FrobeniusProfile profile =
        frobenius_profile(ideal, static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(profile.b_hat);
  }
}
BENCHMARK(BM_FrobeniusProfileRow)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
