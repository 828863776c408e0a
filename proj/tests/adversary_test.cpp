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

#include <gtest/gtest.h>

#include "domgame/adversary.hpp"
#include "domgame/error.hpp"
#include "domgame/generate.hpp"
#include "domgame/solver.hpp"

namespace domgame {
namespace {

const StrategyConfig kD{DominatorPolicy::kBreakingP5, GameType::kDGame};
const StrategyConfig kS{DominatorPolicy::kBreakingP5, GameType::kSGame};

TEST(Exhaustive, Examples) {
  EXPECT_EQ(exhaustive_worst(path_graph(2), kD).max_length, 1);
  auto p5 = exhaustive_worst(path_graph(5), kD);
  EXPECT_EQ(p5.max_length, 3);
  EXPECT_EQ(p5.violation_count, 0u);
  auto f = exhaustive_worst(fig2a(2), kD);
  EXPECT_LE(f.max_length, 6);
  EXPECT_LE(f.worst_slack, 0);
  EXPECT_EQ(f.violation_count, 0u);
}

TEST(Exhaustive, WorstTraceHasWorstLength) {
  auto r = exhaustive_worst(fig2a(3), kS);
  EXPECT_EQ(static_cast<int>(r.worst_trace.size()), r.max_length);
  EXPECT_EQ(r.worst_summary.moves, r.max_length);
  EXPECT_LE(r.max_length, (3 * 15 + 2) / 5);
  EXPECT_GT(r.leaves, 1u);
}

TEST(Exhaustive, NodeCap) {
  ExhaustiveOptions opt;
  opt.max_nodes = 10;
  EXPECT_THROW(exhaustive_worst(fig2a(3), kD, opt), CapacityError);
}

TEST(Exhaustive, WorstCaseDominatesOptimalValue) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (!classify(t).weakly_sk13_free) continue;
      for (auto cfg : {kD, kS}) {
        const int worst = exhaustive_worst(t, cfg).max_length;
        EXPECT_LE(game_value(t, cfg.game), worst) << format_forest(t, false);
      }
    }
  }
}

TEST(StallerPick, GreedyMinAfterFirstMove) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, kD);
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);  // plays 1
  // 2 and 4 both gain 3; the smaller index wins. 3 gains 8.
  EXPECT_EQ(staller_pick(s, ctx.ledger, {StallerKind::kGreedyMin, 0}), 2);
}

TEST(StallerPick, MinimaxAfterFirstMove) {
  auto p5 = path_graph(5);
  ExactSolver solver(p5);
  StrategyContext ctx(p5, kD);
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  EXPECT_EQ(staller_pick(s, ctx.ledger, {StallerKind::kMinimax, 0}, &solver), 2);
  EXPECT_THROW(staller_pick(s, ctx.ledger, {StallerKind::kMinimax, 0}), GameError);
}

TEST(StallerPick, RandomIsReproducible) {
  auto f = fig2a(3);
  auto a = play_out(f, kD, {StallerKind::kRandom, 7});
  auto b = play_out(f, kD, {StallerKind::kRandom, 7});
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].vertex, b.trace[i].vertex);
}

TEST(StallerPick, AntiWeightingTargetsPfiveChild) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, kD);
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  // 2 is highlighted with white P5-child 3.
  EXPECT_EQ(staller_pick(s, ctx.ledger, {StallerKind::kAntiWeighting, 0}), 3);
}

TEST(StallerPick, AntiWeightingFallsBackToGreedyMin) {
  auto p4 = path_graph(4);
  StrategyContext ctx(p4, kD);
  GameState s(p4, Player::kDominator);
  dominator_turn(s, ctx);
  EXPECT_TRUE(ctx.ledger.highlighted_set().empty());
  EXPECT_EQ(staller_pick(s, ctx.ledger, {StallerKind::kAntiWeighting, 0}),
            staller_pick(s, ctx.ledger, {StallerKind::kGreedyMin, 0}));
}

TEST(StallerPick, GameOverThrows) {
  auto k2 = path_graph(2);
  StrategyContext ctx(k2, kD);
  GameState s(k2, Player::kDominator);
  s.apply_move(0);
  EXPECT_THROW(staller_pick(s, ctx.ledger, {StallerKind::kGreedyMin, 0}), GameError);
}

TEST(PlayOut, MinimaxIsConsistentWithSolver) {
  // Both sides playing solver moves realize the game value.
  for (int n = 2; n <= 10; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      ExactSolver solver(t);
      for (Player first : {Player::kDominator, Player::kStaller}) {
        GameState s(t, first);
        const int v = solver.solve(s).value;
        int moves = 0;
        while (!s.over()) {
          s.apply_move(*solver.solve(s).principal_move);
          ++moves;
        }
        ASSERT_EQ(moves, v) << format_forest(t, false);
      }
    }
  }
}

TEST(PlayOut, MinimaxStallerNeverBeatsExhaustive) {
  for (const auto& t : enumerate_trees(9)) {
    if (!classify(t).weakly_sk13_free) continue;
    auto r = play_out(t, kD, {StallerKind::kMinimax, 0});
    EXPECT_TRUE(r.violations.empty());
    EXPECT_LE(r.summary.moves, exhaustive_worst(t, kD).max_length);
  }
}

TEST(ParseAdversary, Names) {
  EXPECT_EQ(parse_adversary("greedy-min"), StallerKind::kGreedyMin);
  EXPECT_EQ(parse_adversary("anti_weighting"), StallerKind::kAntiWeighting);
  EXPECT_EQ(adversary_name(StallerKind::kMinimax), "minimax");
  EXPECT_THROW(parse_adversary("smart"), InputError);
}

}  // namespace
}  // namespace domgame
