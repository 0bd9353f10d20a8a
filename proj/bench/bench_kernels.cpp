// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "netgame/dynamics.hpp"
#include "netgame/local_sim.hpp"
#include "netgame/lvl.hpp"
#include "netgame/oracle.hpp"

using namespace netgame;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_EnumerateNe(benchmark::State& state) {
  GraphicalGame g = pgg_game(bipartite_double_cover(star_matching(2, 3, 1).network), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ne(g, mode(state)).equilibria.size());
}
BENCHMARK(BM_EnumerateNe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  Network n = random_regular(200000, 3, 1);
  GraphicalGame g = minority_game(n);
  LvlSpec spec = compile_lvl(g);
  StrategyProfile a = random_profile(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify(spec, n, a, mode(state)).violations.size());
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SimulateFairRounds(benchmark::State& state) {
  Network n = random_regular(100000, 4, 3);
  GraphicalGame g = coloring_game(n, 5);
  DistanceColoring c = distance_coloring(n, 2);
  StrategyProfile init = random_profile(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fair_rounds(g, init, c, 2, mode(state)).local_rounds);
}
BENCHMARK(BM_SimulateFairRounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MeasuredInefficiency(benchmark::State& state) {
  GraphicalGame g = minority_game(random_regular(2000, 3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(measured_inefficiency(g, 5, 64, 6, mode(state)).mean_br_welfare);
}
BENCHMARK(BM_MeasuredInefficiency)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CombinatorialOptima(benchmark::State& state) {
  Network n = star_matching(6, 3, 7).network;
  for (auto _ : state) benchmark::DoNotOptimize(combinatorial_optima(n, mode(state)).max_cut);
}
BENCHMARK(BM_CombinatorialOptima)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
