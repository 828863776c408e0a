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

namespace domgame {

/// White: undominated. Blue: dominated with an undominated neighbor.
/// Red: closed neighborhood fully dominated.
enum class Color : std::uint8_t { kWhite, kBlue, kRed };

constexpr int color_value(Color c) {
  switch (c) {
    case Color::kWhite: return 3;
    case Color::kBlue: return 2;
    case Color::kRed: return 0;
  }
  return 0;
}

char color_char(Color c);

enum class Player : std::uint8_t { kDominator, kStaller };

constexpr Player other(Player p) {
  return p == Player::kDominator ? Player::kStaller : Player::kDominator;
}
std::string player_name(Player p);

enum class GameType : std::uint8_t { kDGame, kSGame };

constexpr Player first_player(GameType g) {
  return g == GameType::kDGame ? Player::kDominator : Player::kStaller;
}

struct Transition {
  Vertex vertex = kNoVertex;
  Color from = Color::kWhite;
  Color to = Color::kWhite;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Everything one move changed. Enough to undo it.
struct TurnOutcome {
  Vertex vertex = kNoVertex;
  Player player = Player::kDominator;
  int points = 0;
  std::vector<Transition> transitions;
  std::vector<Vertex> new_reds;
  std::vector<Vertex> new_blues;

  /// Color of `v` before the move (`after` is its current color).
  Color color_before(Vertex v, Color after) const;
};

struct MovePreview {
  int points = 0;
  int new_reds = 0;
};

struct HistoryEntry {
  int turn = 0;  // 1-based
  Player player = Player::kDominator;
  Vertex vertex = kNoVertex;
};

/// Induced residual graph: white and blue vertices, edges with no red
/// endpoint and not joining two blue vertices.
struct ResidualGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Mutable domination-game position on a forest.
///
/// The dominated set is the source of truth; colors, the potential and the
/// per-vertex count of undominated closed neighbors are maintained
/// incrementally from it. The forest must outlive the state.
class GameState {
 public:
  GameState(const RootedForest& forest, Player first);

  const RootedForest& forest() const { return *forest_; }
  int size() const { return forest_->size(); }

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  bool dominated(Vertex v) const { return colors_[v] != Color::kWhite; }
  int potential() const { return potential_; }
  Player to_move() const { return to_move_; }
  int turn() const { return static_cast<int>(history_.size()); }
  const std::vector<HistoryEntry>& history() const { return history_; }
  bool over() const { return potential_ == 0; }

  /// Number of undominated vertices in N[v].
  int white_closed(Vertex v) const { return white_closed_[v]; }
  bool is_legal(Vertex v) const { return v >= 0 && v < size() && white_closed_[v] > 0; }
  std::vector<Vertex> legal_moves() const;

  int gain_preview(Vertex v) const { return preview(v).points; }
  MovePreview preview(Vertex v) const;

  /// Plays `v` for the player to move. Throws GameError if illegal.
  TurnOutcome apply_move(Vertex v);
  /// Reverts the most recent move, which must be `out`.
  void undo(const TurnOutcome& out);

  std::vector<Vertex> vertices_of(Color c) const;
  std::uint64_t dominated_mask() const;  // requires size() <= 64

  int residual_degree(Vertex v) const;
  bool residual_adjacent(Vertex u, Vertex v) const;
  ResidualGraph residual_view() const;

  /// Recomputes every color from the dominated set and checks the cached
  /// state. Returns a description of the first mismatch, or empty.
  std::string audit() const;

 private:
  Color derive(Vertex v) const;

  const RootedForest* forest_;
  std::vector<Color> colors_;
  std::vector<int> white_closed_;
  int potential_ = 0;
  Player to_move_;
  std::vector<HistoryEntry> history_;
};

}  // namespace domgame
