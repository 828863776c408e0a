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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domgame/forest.hpp"
#include "domgame/game.hpp"

namespace domgame {

/// Dominator phases. The pointer only moves forward in declaration order.
/// kP1_0 / kP1_1 belong to breaking-P5, kP1 to the plain greedy strategy.
enum class Phase : std::uint8_t { kP1_0, kP1_1, kP1, kP2, kP3, kP4, kDone };

std::string phase_name(Phase p);
constexpr bool is_phase1(Phase p) { return p <= Phase::kP1; }

enum class DominatorPolicy : std::uint8_t { kGreedy, kBreakingP5 };
std::string policy_name(DominatorPolicy p);

struct StrategyConfig {
  DominatorPolicy policy = DominatorPolicy::kBreakingP5;
  GameType game = GameType::kDGame;
  ChildTieRule tie_rule = ChildTieRule::kSmallerIndex;
  /// Also run the additional weighting process when a P5-child goes
  /// straight from white to red without being played.
  bool additional_on_white = false;
};

/// Which weighting rule the last ledger update applied.
enum class WeightCase : std::uint8_t {
  kNone,       // outside the era
  kDominator,  // Dominator turn (with or without election)
  kOpening,    // Staller's first move of an S-game
  kA, kB, kC, kD, kEa, kEb, kEc,
};
std::string weight_case_name(WeightCase c);

// -- Position queries --------------------------------------------------------

/// Centers of leaf paths whose five vertices are all white. Sorted.
std::vector<Vertex> dangerous_centers(const GameState& s);

/// Blue centers of residual 5-paths whose other vertices are white and whose
/// ends are residual leaves. Sorted.
std::vector<Vertex> critical_centers(const GameState& s);

struct SubtreePartition {
  std::vector<Vertex> c;        // component of F minus red vertices containing u
  std::vector<Vertex> c_plus;   // part reachable from u without dropping below h(u)
  std::vector<Vertex> c_minus;  // c \ c_plus
};

/// Throws GameError if `u` is red.
SubtreePartition subtree_partition(const GameState& s, Vertex u);

struct DominatorChoice {
  Vertex vertex = kNoVertex;
  std::optional<Vertex> elected;
  Phase phase = Phase::kP1;
  bool tie_broken = false;
};

// -- Ledger --------------------------------------------------------------------

/// Dominator-side bookkeeping for one game: the phase pointer, dangerous
/// centers, highlighted vertices, blue weights and the bonus accounting.
///
/// Weights and bonuses are maintained only through the era: turns up to and
/// including the Staller reply that precedes Dominator's first move outside
/// P1.0 (breaking-P5) or P1 (greedy). Afterwards the ledger is frozen.
class StrategyLedger {
 public:
  StrategyLedger(const RootedForest& f, StrategyConfig config);

  const StrategyConfig& config() const { return config_; }
  const ClassFlags& flags() const { return flags_; }
  Phase phase() const { return phase_; }

  const std::vector<Vertex>& dangerous() const { return dangerous_; }
  bool is_dangerous(Vertex v) const;

  bool highlighted(Vertex v) const { return highlighted_[v] != 0; }
  std::vector<Vertex> highlighted_set() const;
  /// Every vertex ever highlighted, in election order.
  const std::vector<Vertex>& ever_highlighted() const { return ever_highlighted_; }
  /// P5-child recorded at election time; kNoVertex if `d` was never elected.
  Vertex p5_child_of(Vertex d) const { return p5_child_[d]; }
  /// Election turns where both neighbors of the center lay above it.
  const std::vector<int>& tie_turns() const { return tie_turns_; }
  const std::map<int, Vertex>& elected() const { return elected_; }

  /// Weight of a blue vertex; nullopt outside the weight domain.
  std::optional<int> weight(Vertex v) const;
  std::vector<std::pair<Vertex, int>> weights() const;
  int weight_sum() const { return weight_sum_; }   // K_k
  int bonus_sum() const { return bonus_sum_; }     // S_k
  const std::vector<int>& bonuses() const { return bonuses_; }  // e_1 ... e_k

  bool era_open() const { return !k_star2_.has_value(); }
  /// True if turn k lies in the era (possibly still open).
  bool in_era(int k) const { return era_open() || k <= *k_star2_; }
  std::optional<int> k_star2() const { return k_star2_; }
  int c_star2() const { return c_star2_; }
  /// Bonus sum over the era, excluding the S-game opener.
  int e_star2() const;
  std::optional<int> opening_bonus() const;

  WeightCase last_case() const { return last_case_; }

  /// Test hook: overwrite a weight in place.
  void force_weight(Vertex v, int w);

 private:
  friend DominatorChoice next_dominator_move(const GameState& s, StrategyLedger& ledger);
  friend void ledger_update(StrategyLedger& ledger, const GameState& after,
                            const TurnOutcome& out, std::optional<Vertex> elected);

  StrategyConfig config_;
  ClassFlags flags_;
  Phase phase_;
  std::vector<Vertex> dangerous_;
  std::vector<char> highlighted_;
  std::vector<Vertex> ever_highlighted_;
  std::vector<Vertex> p5_child_;
  std::vector<int> tie_turns_;
  std::map<int, Vertex> elected_;
  std::vector<std::int8_t> weight_;  // -1: no weight
  int weight_sum_ = 0;
  int bonus_sum_ = 0;
  std::vector<int> bonuses_;
  std::optional<int> k_star2_;
  int c_star2_ = 0;
  WeightCase last_case_ = WeightCase::kNone;
};

/// Picks Dominator's move per the configured policy and advances the phase
/// pointer past phases that no legal move satisfies. Freezes the era the
/// first time the pointer leaves its phase.
DominatorChoice next_dominator_move(const GameState& s, StrategyLedger& ledger);

/// Applies the highlighting and weighting processes for the move that
/// produced `after`, then records the bonus and recomputes dangerous
/// centers. `elected` must be the center elected by next_dominator_move.
void ledger_update(StrategyLedger& ledger, const GameState& after, const TurnOutcome& out,
                   std::optional<Vertex> elected);

// -- Invariants ----------------------------------------------------------------

struct Violation {
  int turn = 0;
  std::string check;
  std::string detail;
};

/// Checks that depend only on the current position and ledger. Invariants
/// I to III apply on era turns of breaking-P5 games on weakly S(K1,3)-free
/// forests. Violations are data, never thrown.
std::vector<Violation> check_invariants(const StrategyLedger& ledger, const GameState& s);

/// Checks that relate consecutive turns: phase gain thresholds, monotone
/// dangerous set, highlight-time facts about P5-children, persistence of
/// non-critical blue vertices, no new critical center after the era, and
/// the end-of-game accounting.
class InvariantMonitor {
 public:
  InvariantMonitor(const RootedForest& f, const StrategyConfig& config);

  void after_turn(const GameState& s, const StrategyLedger& ledger, const TurnOutcome& out,
                  const std::optional<DominatorChoice>& choice);
  void at_end(const GameState& s, const StrategyLedger& ledger);

  const std::vector<Violation>& violations() const { return violations_; }
  std::vector<Violation> take_violations();
  int total_points() const { return total_points_; }

 private:
  void add(int turn, std::string check, std::string detail);

  const RootedForest* forest_;
  StrategyConfig config_;
  std::vector<Vertex> prev_dangerous_;
  std::vector<Vertex> prev_critical_;
  std::vector<char> settled_noncritical_;
  int total_points_ = 0;
  std::vector<Violation> violations_;
};

// -- Driving a game --------------------------------------------------------------

/// One row of a game trace.
struct TurnRecord {
  int k = 0;
  Player player = Player::kDominator;
  Vertex vertex = kNoVertex;
  std::optional<Vertex> elected;
  bool tie_broken = false;
  int points = 0;
  std::optional<int> bonus;
  Phase phase = Phase::kP1;
  WeightCase weight_case = WeightCase::kNone;
  int dangerous = 0;
  std::vector<Vertex> highlighted;
  std::vector<std::pair<Vertex, int>> weights;
  int weight_sum = 0;
  int bonus_sum = 0;
  int critical = 0;
  int whites = 0;
  int blues = 0;
  int reds = 0;
};

struct PlayoutSummary {
  int n = 0;
  GameType game = GameType::kDGame;
  int moves = 0;
  int total_points = 0;
  int k_star2 = 0;
  int c_star2 = 0;
  int e_star2 = 0;
  int bonus_sum = 0;  // S at k**, including the S-game opener
  std::optional<int> opening_bonus;
};

/// Ledger, monitor and trace for one game; copyable so a search can fork it.
struct StrategyContext {
  StrategyContext(const RootedForest& f, StrategyConfig config, bool checks = true);

  StrategyLedger ledger;
  InvariantMonitor monitor;
  std::vector<TurnRecord> records;
  bool checks = true;
};

/// Plays Dominator's strategy move on `s` and returns the applied outcome.
TurnOutcome dominator_turn(GameState& s, StrategyContext& ctx);
/// Plays Staller's move `v` on `s`.
TurnOutcome staller_turn(GameState& s, StrategyContext& ctx, Vertex v);
/// Runs end-of-game checks (idempotent per context if called once).
void finish_game(const GameState& s, StrategyContext& ctx);
PlayoutSummary summarize(const GameState& s, const StrategyContext& ctx);

}  // namespace domgame
