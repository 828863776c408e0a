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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domgame/adversary.hpp"
#include "domgame/forest.hpp"
#include "domgame/game.hpp"
#include "domgame/strategy.hpp"

namespace domgame {

inline constexpr int kTraceSchemaVersion = 1;

enum class ClassFilter { kAll, kWeaklyFree, kNoDist4 };
ClassFilter parse_class_filter(const std::string& s);
std::string class_filter_name(ClassFilter c);

enum class RootMode { kDefault, kSweep, kRandom };

struct RootOptions {
  RootMode mode = RootMode::kDefault;
  int count = 1;  // random:k
  /// Sweeps beyond this order sample `sweep_sample` roots instead.
  int sweep_threshold = 16;
  int sweep_sample = 16;
};
RootOptions parse_root_options(const std::string& s);

/// `exhaustive`, or a Staller policy sampled over `playouts` games.
struct BatchAdversary {
  bool exhaustive = true;
  StallerKind kind = StallerKind::kGreedyMin;
  int playouts = 1;
};
BatchAdversary parse_batch_adversary(const std::string& s);

GameType parse_game_type(const std::string& s);
std::string game_type_name(GameType g);
DominatorPolicy parse_dominator_policy(const std::string& s);

struct BatchConfig {
  /// enum:N | enum:A-B | pairs:N | files:a,b | family:<family spec> |
  /// random:COUNT:NMAX:SEED | random-wf:COUNT:NMAX:SEED
  std::vector<std::string> sources;
  ClassFilter filter = ClassFilter::kWeaklyFree;
  std::vector<GameType> games{GameType::kDGame};
  StrategyConfig strategy;
  BatchAdversary adversary;
  RootOptions roots;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  int solver_cap = 20;
  std::uint64_t node_cap = 200'000'000;
  bool compute_gamma = true;
};

/// Bound judged for a row: floor(3n/5) for the D-game, floor((3n+2)/5) for
/// the S-game, floor((3n+1)/5) for greedy S-games on forests without leaves
/// at distance 4.
int class_bound(int n, GameType g, DominatorPolicy policy, const ClassFlags& flags,
                ClassFilter filter);

struct ReportRow {
  std::string forest_id;
  std::string roots;  // space-separated root list
  int n = 0;
  ClassFlags flags;
  GameType game = GameType::kDGame;
  bool in_class = false;
  std::optional<int> gamma;
  int bound = 0;
  std::optional<int> strategy_worst;
  int e_star2 = 0;
  int c_star2 = 0;
  int k_star2 = 0;
  bool holds = true;
  std::string skipped;  // reason, empty if the row ran
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t playouts = 0;  // completed games (branches) examined
};

struct VerificationReport {
  std::vector<ReportRow> rows;

  /// 1 iff some in-class row fails, else 0.
  int exit_code() const;
  std::uint64_t total_playouts() const;
};

struct BatchItem {
  std::string id;
  RootedForest forest;
};

/// Expands the configured sources into forests. Throws InputError.
std::vector<BatchItem> expand_sources(const BatchConfig& config);

VerificationReport run_batch(const BatchConfig& config);
VerificationReport run_batch(const BatchConfig& config, const std::vector<BatchItem>& items);

enum class ReportFormat { kCsv, kJsonl };
ReportFormat parse_report_format(const std::string& s);
void write_report(std::ostream& os, const VerificationReport& report, ReportFormat format);

std::string flags_string(const ClassFlags& flags);

/// One JSON object per line; keys in fixed order.
void write_trace(std::ostream& os, const std::vector<TurnRecord>& trace);
std::string trace_line(const TurnRecord& r);

/// Terminal play against the engine. Returns the final position; stops
/// cleanly on end of input.
GameState play_interactive(const RootedForest& f, Player human, const StrategyConfig& engine,
                           const AdversaryPolicy& engine_staller, std::istream& in,
                           std::ostream& out);

}  // namespace domgame
