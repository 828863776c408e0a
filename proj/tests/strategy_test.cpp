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

#include <random>

#include "domgame/adversary.hpp"
#include "domgame/error.hpp"
#include "domgame/generate.hpp"
#include "domgame/strategy.hpp"

namespace domgame {
namespace {

// P5 with a pendant leaf 5 on the center.
RootedForest p5_pendant() {
  return RootedForest::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
}

bool has_check(const std::vector<Violation>& vs, const std::string& name) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.check == name; });
}

TEST(DangerousCenters, Examples) {
  auto p5 = path_graph(5);
  GameState s(p5, Player::kDominator);
  EXPECT_EQ(dangerous_centers(s), std::vector<Vertex>{2});
  s.apply_move(1);
  EXPECT_TRUE(dangerous_centers(s).empty());

  auto t = fig2a(2);
  EXPECT_EQ(dangerous_centers(GameState(t, Player::kDominator)), (std::vector<Vertex>{2, 7}));
}

TEST(CriticalCenters, Examples) {
  auto f = p5_pendant();
  GameState s(f, Player::kStaller);
  EXPECT_TRUE(critical_centers(s).empty());
  s.apply_move(5);
  EXPECT_EQ(critical_centers(s), std::vector<Vertex>{2});

  auto p5 = path_graph(5);
  GameState t(p5, Player::kDominator);
  EXPECT_TRUE(critical_centers(t).empty());
  t.apply_move(1);
  EXPECT_TRUE(critical_centers(t).empty());
}

TEST(SubtreePartition, Examples) {
  auto p5 = path_graph(5);
  GameState s(p5, Player::kDominator);
  EXPECT_EQ(subtree_partition(s, 2).c, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  s.apply_move(1);
  auto p3 = subtree_partition(s, 3);
  EXPECT_EQ(p3.c, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(p3.c_plus, (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(p3.c_minus, std::vector<Vertex>{2});
  auto p2 = subtree_partition(s, 2);
  EXPECT_EQ(p2.c_plus, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(p2.c_minus.empty());
  EXPECT_THROW(subtree_partition(s, 1), GameError);
}

TEST(NextDominatorMove, ElectsAndPlaysRelatedVertex) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  auto choice = next_dominator_move(s, ctx.ledger);
  EXPECT_EQ(choice.vertex, 1);
  EXPECT_EQ(choice.elected, 2);
  EXPECT_EQ(choice.phase, Phase::kP1_0);
  auto out = s.apply_move(choice.vertex);
  EXPECT_EQ(out.points, 7);
  EXPECT_EQ(out.new_reds.size(), 2u);
}

TEST(NextDominatorMove, PathOnFourSkipsToPhaseOneOne) {
  auto p4 = path_graph(4);
  StrategyContext ctx(p4, {});
  GameState s(p4, Player::kDominator);
  auto choice = next_dominator_move(s, ctx.ledger);
  EXPECT_EQ(choice.vertex, 1);
  EXPECT_FALSE(choice.elected.has_value());
  EXPECT_EQ(choice.phase, Phase::kP1_1);
  EXPECT_EQ(s.gain_preview(1), 7);
  EXPECT_EQ(s.gain_preview(2), 7);
  // No dangerous center at the start: the era is empty.
  EXPECT_EQ(ctx.ledger.k_star2(), 0);
}

TEST(NextDominatorMove, DisjointEdgesFallToPhaseThree) {
  auto f = RootedForest::build(6, {{0, 1}, {2, 3}, {4, 5}});
  StrategyContext ctx(f, {});
  GameState s(f, Player::kDominator);
  auto choice = next_dominator_move(s, ctx.ledger);
  EXPECT_EQ(choice.phase, Phase::kP3);
  EXPECT_EQ(s.gain_preview(choice.vertex), 6);
  EXPECT_EQ(choice.vertex, 0);
}

TEST(NextDominatorMove, ElectsHighestCenter) {
  auto f = fig2a(2);  // centers 2 (height 2) and 7 (height 3)
  StrategyContext ctx(f, {});
  GameState s(f, Player::kDominator);
  auto choice = next_dominator_move(s, ctx.ledger);
  EXPECT_EQ(choice.elected, 7);
  EXPECT_TRUE(choice.tie_broken);  // 6 and 8 both sit above 7
  EXPECT_EQ(choice.vertex, 8);

  StrategyConfig alt;
  alt.tie_rule = ChildTieRule::kLargerIndex;
  StrategyContext ctx2(f, alt);
  EXPECT_EQ(next_dominator_move(s, ctx2.ledger).vertex, 6);
}

TEST(NextDominatorMove, GreedyPrefersWhiteStem) {
  auto f = double_star(2, 2);
  StrategyConfig cfg;
  cfg.policy = DominatorPolicy::kGreedy;
  StrategyContext ctx(f, cfg);
  GameState s(f, Player::kDominator);
  auto choice = next_dominator_move(s, ctx.ledger);
  EXPECT_EQ(choice.phase, Phase::kP1);
  EXPECT_EQ(choice.vertex, 0);  // 3 reds (0,2,3), center 1 blue: 10 points
  EXPECT_EQ(s.gain_preview(0), 10);
}

TEST(LedgerUpdate, PathOnFiveDominatorTurn) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  const auto& L = ctx.ledger;
  EXPECT_EQ(L.highlighted_set(), std::vector<Vertex>{2});
  EXPECT_EQ(L.weight(2), 0);
  EXPECT_EQ(L.weight_sum(), 0);
  EXPECT_EQ(L.bonuses(), std::vector<int>{0});
  EXPECT_EQ(L.bonus_sum(), 0);
  EXPECT_EQ(L.p5_child_of(2), 3);
  EXPECT_EQ(L.last_case(), WeightCase::kDominator);
}

TEST(LedgerUpdate, CaseEaStallerPlaysHighlighted) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  auto out = staller_turn(s, ctx, 2);
  const auto& L = ctx.ledger;
  EXPECT_EQ(L.last_case(), WeightCase::kEa);
  EXPECT_EQ(out.new_blues, std::vector<Vertex>{3});
  EXPECT_EQ(L.weight(3), 0);
  EXPECT_EQ(L.bonuses().back(), 0);
  EXPECT_EQ(L.weight_sum(), 0);
  EXPECT_EQ(L.bonus_sum(), 0);
  EXPECT_TRUE(ctx.monitor.violations().empty());
}

TEST(LedgerUpdate, CaseBStallerPlaysPfiveChild) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  auto out = staller_turn(s, ctx, 3);
  const auto& L = ctx.ledger;
  EXPECT_EQ(L.last_case(), WeightCase::kB);
  // 3 and 4 turn W->R, 2 turns B->R: 8 points, so e2 = 8 - 3.
  EXPECT_EQ(out.points, 8);
  EXPECT_EQ(L.bonuses().back(), 5);
  EXPECT_FALSE(L.weight(2).has_value());  // d went red and left B
  EXPECT_EQ(L.weight_sum(), 0);
  EXPECT_EQ(L.bonus_sum(), 5);
  EXPECT_TRUE(s.over());
  EXPECT_EQ(L.k_star2(), 2);
  EXPECT_EQ(L.c_star2(), 0);
}

TEST(LedgerUpdate, SGameOpeningBonus) {
  auto f = p5_pendant();
  StrategyContext ctx(f, {DominatorPolicy::kBreakingP5, GameType::kSGame});
  GameState s(f, Player::kStaller);
  auto out = staller_turn(s, ctx, 5);
  EXPECT_EQ(ctx.ledger.last_case(), WeightCase::kOpening);
  EXPECT_EQ(out.points, 4);  // 5 W->R, 2 W->B
  EXPECT_EQ(ctx.ledger.bonuses(), std::vector<int>{-1});
  EXPECT_EQ(ctx.ledger.weight(2), 1);
  EXPECT_EQ(ctx.ledger.opening_bonus(), -1);
  EXPECT_TRUE(ctx.monitor.violations().empty());
}

TEST(LedgerUpdate, RejectsForeignElection) {
  auto p5 = path_graph(5);
  StrategyLedger L(p5, {});
  GameState s(p5, Player::kDominator);
  auto out = s.apply_move(0);
  EXPECT_THROW(ledger_update(L, s, out, Vertex{4}), StrategyError);
}

TEST(CheckInvariants, FreshStateIsClean) {
  for (auto f : {path_graph(5), fig2a(3), fig2b(2), double_star(3, 1)}) {
    StrategyLedger L(f, {});
    GameState s(f, Player::kDominator);
    EXPECT_TRUE(check_invariants(L, s).empty());
  }
}

TEST(CheckInvariants, PathOnFiveAfterElection) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  EXPECT_TRUE(check_invariants(ctx.ledger, s).empty());
  EXPECT_EQ(s.color(1), Color::kRed);
  EXPECT_TRUE(critical_centers(s).empty());
}

TEST(CheckInvariants, MutationOnCriticalWeightIsReported) {
  auto f = p5_pendant();
  StrategyContext ctx(f, {DominatorPolicy::kBreakingP5, GameType::kSGame});
  GameState s(f, Player::kStaller);
  staller_turn(s, ctx, 5);
  ASSERT_EQ(critical_centers(s), std::vector<Vertex>{2});
  ASSERT_TRUE(check_invariants(ctx.ledger, s).empty());
  ctx.ledger.force_weight(2, 0);
  auto vs = check_invariants(ctx.ledger, s);
  EXPECT_TRUE(has_check(vs, "invariant-III"));
}

TEST(CheckInvariants, MutationOnHighlightedWeightBreaksBalance) {
  auto p5 = path_graph(5);
  StrategyContext ctx(p5, {});
  GameState s(p5, Player::kDominator);
  dominator_turn(s, ctx);
  ctx.ledger.force_weight(2, 1);
  auto vs = check_invariants(ctx.ledger, s);
  EXPECT_TRUE(has_check(vs, "invariant-I"));
}

TEST(Trace, RunningBonusSum) {
  auto f = fig2a(3);
  auto r = play_out(f, {DominatorPolicy::kBreakingP5, GameType::kSGame},
                    {StallerKind::kRandom, 5});
  int running = 0;
  for (const auto& rec : r.trace) {
    if (rec.bonus) running += *rec.bonus;
    EXPECT_EQ(rec.bonus_sum, running);
  }
  EXPECT_TRUE(r.violations.empty());
}

struct PlayoutParam {
  DominatorPolicy policy;
  GameType game;
  StallerKind staller;
  ChildTieRule tie;
  bool weakly_free_only;
};

class RandomPlayouts : public ::testing::TestWithParam<PlayoutParam> {};

TEST_P(RandomPlayouts, NoViolations) {
  const auto p = GetParam();
  std::mt19937_64 rng(17 + static_cast<int>(p.staller) * 131 + static_cast<int>(p.game));
  StrategyConfig cfg{p.policy, p.game, p.tie, false};
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 29);
    const std::uint64_t seed = rng();
    RootedForest t = p.weakly_free_only ? random_weakly_free_tree(n, seed) : random_tree(n, seed);
    t = t.with_roots(RootSpec::random(rng()));
    auto r = play_out(t, cfg, {p.staller, rng()});
    ASSERT_TRUE(r.violations.empty())
        << r.violations.front().check << ": " << r.violations.front().detail << "\n"
        << format_forest(t, true);
    const int bonus = r.summary.bonus_sum;
    EXPECT_LE(5 * r.summary.moves, 3 * n - bonus + r.summary.c_star2);
    if (p.weakly_free_only) {
      const int bound = p.game == GameType::kDGame ? 3 * n / 5 : (3 * n + 2) / 5;
      EXPECT_LE(r.summary.moves, bound);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Strategies, RandomPlayouts,
    ::testing::Values(
        PlayoutParam{DominatorPolicy::kBreakingP5, GameType::kDGame, StallerKind::kRandom,
                     ChildTieRule::kSmallerIndex, true},
        PlayoutParam{DominatorPolicy::kBreakingP5, GameType::kSGame, StallerKind::kRandom,
                     ChildTieRule::kSmallerIndex, true},
        PlayoutParam{DominatorPolicy::kBreakingP5, GameType::kDGame, StallerKind::kAntiWeighting,
                     ChildTieRule::kSmallerIndex, true},
        PlayoutParam{DominatorPolicy::kBreakingP5, GameType::kSGame, StallerKind::kAntiWeighting,
                     ChildTieRule::kLargerIndex, true},
        PlayoutParam{DominatorPolicy::kBreakingP5, GameType::kDGame, StallerKind::kGreedyMin,
                     ChildTieRule::kLargerIndex, true},
        PlayoutParam{DominatorPolicy::kGreedy, GameType::kDGame, StallerKind::kRandom,
                     ChildTieRule::kSmallerIndex, false},
        PlayoutParam{DominatorPolicy::kGreedy, GameType::kSGame, StallerKind::kGreedyMin,
                     ChildTieRule::kSmallerIndex, false}));

}  // namespace
}  // namespace domgame
