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
#include <string>
#include <vector>

#include "domgame/forest.hpp"
#include "domgame/game.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategy.hpp"

namespace domgame {

enum class StallerKind : std::uint8_t { kRandom, kGreedyMin, kMinimax, kAntiWeighting };

struct AdversaryPolicy {
  StallerKind kind = StallerKind::kGreedyMin;
  std::uint64_t seed = 0;
};

std::string adversary_name(StallerKind k);
/// Accepts the policy names with underscores or dashes; throws InputError
/// otherwise.
StallerKind parse_adversary(const std::string& name);

/// Staller's reply in `s`. Deterministic given the policy, the seed and the
/// move history. kMinimax needs `solver`.
Vertex staller_pick(const GameState& s, const StrategyLedger& ledger,
                    const AdversaryPolicy& policy, ExactSolver* solver = nullptr);

struct PlayoutResult {
  std::vector<TurnRecord> trace;
  PlayoutSummary summary;
  std::vector<Violation> violations;
};

/// One full game: Dominator follows `config`, Staller follows `adversary`.
PlayoutResult play_out(const RootedForest& f, const StrategyConfig& config,
                       const AdversaryPolicy& adversary, bool checks = true,
                       ExactSolver* solver = nullptr);

struct ExhaustiveOptions {
  std::uint64_t max_nodes = 200'000'000;
  bool checks = true;
  std::size_t max_violations_kept = 16;
};

struct ExhaustiveResult {
  int max_length = 0;
  std::vector<TurnRecord> worst_trace;  // first longest branch in move order
  PlayoutSummary worst_summary;
  std::vector<Violation> violations;    // first max_violations_kept
  std::uint64_t violation_count = 0;
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
  int max_c_star2 = 0;
  /// Largest (5 * moves) - (3n - S + c) over all branches; must be <= 0.
  int worst_slack = -(1 << 20);
};

/// Explores every Staller reply against the fixed Dominator strategy.
/// Throws CapacityError past `max_nodes`.
ExhaustiveResult exhaustive_worst(const RootedForest& f, const StrategyConfig& config,
                                  const ExhaustiveOptions& options = {});

}  // namespace domgame
