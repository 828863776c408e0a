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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "domgame/forest.hpp"
#include "domgame/game.hpp"

namespace domgame {

inline constexpr int kDefaultSolverCap = 26;
inline constexpr int kHardSolverCap = 63;

/// Dominated set plus side to move. Colors and legal moves are functions of
/// the dominated set, so equal keys have equal game values.
struct StateKey {
  std::uint64_t dominated = 0;
  Player to_move = Player::kDominator;

  std::uint64_t packed() const {
    return (dominated << 1) | (to_move == Player::kStaller ? 1u : 0u);
  }
};

struct SolveResult {
  int value = 0;  // moves remaining under optimal play
  std::optional<Vertex> principal_move;
  std::uint64_t nodes = 0;
};

/// Thread-safe memo for batch runs over one forest. Concurrent inserts of
/// the same key carry the same value, so duplicates are harmless.
class SharedTable {
 public:
  std::optional<int> find(std::uint64_t key) const;
  void insert(std::uint64_t key, int value);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint64_t, std::int8_t> map;
  };
  std::array<Shard, kShards> shards_;
};

/// Memoized minimax over dominated-set states: Dominator minimizes and
/// Staller maximizes the number of remaining moves.
class ExactSolver {
 public:
  explicit ExactSolver(const RootedForest& f, int cap = kDefaultSolverCap,
                       std::shared_ptr<SharedTable> shared = nullptr);

  int value(StateKey key);
  SolveResult solve(StateKey key);
  SolveResult solve(const GameState& s);

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t full_mask() const { return full_; }
  const std::vector<std::uint64_t>& closed_masks() const { return closed_; }

 private:
  int search(std::uint64_t dom, bool staller);
  int potential(std::uint64_t dom) const;

  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> closed_;
  std::unordered_map<std::uint64_t, std::int8_t> memo_;
  std::shared_ptr<SharedTable> shared_;
  std::uint64_t nodes_ = 0;
};

/// gamma_g (Dominator first) or gamma_g' (Staller first).
int game_value(const RootedForest& f, Player first, int cap = kDefaultSolverCap);
int game_value(const RootedForest& f, GameType g, int cap = kDefaultSolverCap);

/// Optimal move for the side to move; smallest index among optimal moves.
Vertex best_move(const RootedForest& f, const GameState& s, int cap = kDefaultSolverCap);

}  // namespace domgame
