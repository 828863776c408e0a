// Copyright 2026 The domgame Authors
//
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

#include "domgame/adversary.hpp"
#include "domgame/generate.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategy.hpp"

namespace {

using namespace domgame;

void BM_GameValueFig2a(benchmark::State& state) {
  const auto f = fig2a(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(game_value(f, GameType::kDGame));
  state.SetLabel("n=" + std::to_string(f.size()));
}
BENCHMARK(BM_GameValueFig2a)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_GameValueRandomTree(benchmark::State& state) {
  const auto f = random_tree(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(game_value(f, GameType::kSGame));
}
BENCHMARK(BM_GameValueRandomTree)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveWorst(benchmark::State& state) {
  const auto f = fig2a(static_cast<int>(state.range(0)));
  const StrategyConfig cfg{DominatorPolicy::kBreakingP5, GameType::kSGame};
  std::uint64_t leaves = 0;
  for (auto _ : state) leaves = exhaustive_worst(f, cfg).leaves;
  state.counters["branches"] = static_cast<double>(leaves);
}
BENCHMARK(BM_ExhaustiveWorst)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RandomPlayout(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = random_weakly_free_tree(n, 7);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play_out(f, {}, {StallerKind::kRandom, ++seed}).summary.moves);
  }
}
BENCHMARK(BM_RandomPlayout)->Arg(20)->Arg(40)->Arg(60);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n).size());
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
