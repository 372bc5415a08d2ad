// Copyright 2026 The dspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dspec/construction.hpp"
#include "dspec/oracle.hpp"

namespace {

const dspec::Target& target() {
  static const dspec::Target t = [] {
    dspec::Params p;
    p.n = 2;
    p.c = dspec::Rational::make(1, 2);
    p.schedule = dspec::Schedule::constant(2);
    p.depth = 3;
    return dspec::sequence_target(dspec::build_sequence(p));
  }();
  return t;
}

void BM_Reference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspec::psi_star_exhaustive_reference(target(), state.range(0)));
  }
}

void BM_OpenMP(benchmark::State& state) {
  const dspec::SearchOptions opts{100'000'000, static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dspec::psi_star_exhaustive(target(), state.range(0), opts));
  }
}

BENCHMARK(BM_Reference)->Arg(15)->Arg(31)->Arg(63)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)
    ->ArgsProduct({{15, 31, 63, 255}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
