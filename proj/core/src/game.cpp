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

#include "domgame/game.hpp"

#include <algorithm>

#include "domgame/error.hpp"

namespace domgame {

char color_char(Color c) {
  switch (c) {
    case Color::kWhite: return 'W';
    case Color::kBlue: return 'B';
    case Color::kRed: return 'R';
  }
  return '?';
}

std::string player_name(Player p) { return p == Player::kDominator ? "Dominator" : "Staller"; }

Color TurnOutcome::color_before(Vertex v, Color after) const {
  for (const auto& t : transitions) {
    if (t.vertex == v) return t.from;
  }
  return after;
}

GameState::GameState(const RootedForest& forest, Player first)
    : forest_(&forest), to_move_(first) {
  if (forest.has_isolated()) throw GameError("cannot start a game on a forest with isolated vertices");
  const int n = forest.size();
  colors_.assign(n, Color::kWhite);
  white_closed_.resize(n);
  for (Vertex v = 0; v < n; ++v) white_closed_[v] = forest.degree(v) + 1;
  potential_ = 3 * n;
}

std::vector<Vertex> GameState::legal_moves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (white_closed_[v] > 0) out.push_back(v);
  }
  return out;
}

MovePreview GameState::preview(Vertex v) const {
  if (!is_legal(v)) throw GameError("illegal: no new vertex dominated by " + std::to_string(v));
  const auto& f = *forest_;
  std::vector<Vertex> newly;
  if (colors_[v] == Color::kWhite) newly.push_back(v);
  for (Vertex u : f.neighbors(v)) {
    if (colors_[u] == Color::kWhite) newly.push_back(u);
  }
  // Affected vertices: closed neighborhoods of the newly dominated ones. In
  // a forest each is reached through at most two newly dominated vertices.
  std::vector<std::pair<Vertex, int>> dec;
  auto bump = [&](Vertex y) {
    for (auto& [z, c] : dec) {
      if (z == y) {
        ++c;
        return;
      }
    }
    dec.emplace_back(y, 1);
  };
  for (Vertex x : newly) {
    bump(x);
    for (Vertex y : f.neighbors(x)) bump(y);
  }
  MovePreview pv;
  for (auto [y, c] : dec) {
    const Color before = colors_[y];
    const bool dom_after =
        before != Color::kWhite || std::find(newly.begin(), newly.end(), y) != newly.end();
    const int wc = white_closed_[y] - c;
    const Color after = !dom_after ? Color::kWhite : (wc == 0 ? Color::kRed : Color::kBlue);
    pv.points += color_value(before) - color_value(after);
    if (after == Color::kRed && before != Color::kRed) ++pv.new_reds;
  }
  return pv;
}

TurnOutcome GameState::apply_move(Vertex v) {
  if (!is_legal(v)) {
    throw GameError("illegal: no new vertex dominated by " + std::to_string(v));
  }
  const auto& f = *forest_;
  TurnOutcome out;
  out.vertex = v;
  out.player = to_move_;

  std::vector<Vertex> newly;
  if (colors_[v] == Color::kWhite) newly.push_back(v);
  for (Vertex u : f.neighbors(v)) {
    if (colors_[u] == Color::kWhite) newly.push_back(u);
  }
  std::vector<Vertex> touched;
  for (Vertex x : newly) {
    --white_closed_[x];
    touched.push_back(x);
    for (Vertex y : f.neighbors(x)) {
      --white_closed_[y];
      touched.push_back(y);
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  // Mark newly dominated before deriving colors.
  for (Vertex x : newly) colors_[x] = Color::kBlue;
  for (Vertex y : touched) {
    const bool was_white = std::find(newly.begin(), newly.end(), y) != newly.end();
    const Color before = was_white ? Color::kWhite : colors_[y];
    const Color after = derive(y);
    colors_[y] = after;
    if (before == after) continue;
    out.transitions.push_back({y, before, after});
    out.points += color_value(before) - color_value(after);
    if (after == Color::kRed) out.new_reds.push_back(y);
    if (after == Color::kBlue) out.new_blues.push_back(y);
  }
  potential_ -= out.points;
  history_.push_back({turn() + 1, to_move_, v});
  to_move_ = other(to_move_);
  return out;
}

void GameState::undo(const TurnOutcome& out) {
  if (history_.empty() || history_.back().vertex != out.vertex) {
    throw GameError("undo does not match the last move");
  }
  const auto& f = *forest_;
  for (const auto& t : out.transitions) {
    colors_[t.vertex] = t.from;
    if (t.from == Color::kWhite) {
      ++white_closed_[t.vertex];
      for (Vertex y : f.neighbors(t.vertex)) ++white_closed_[y];
    }
  }
  potential_ += out.points;
  history_.pop_back();
  to_move_ = other(to_move_);
}

Color GameState::derive(Vertex v) const {
  if (colors_[v] == Color::kWhite) return Color::kWhite;
  return white_closed_[v] == 0 ? Color::kRed : Color::kBlue;
}

std::vector<Vertex> GameState::vertices_of(Color c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (colors_[v] == c) out.push_back(v);
  }
  return out;
}

std::uint64_t GameState::dominated_mask() const {
  if (size() > 64) throw CapacityError("dominated mask needs n <= 64");
  std::uint64_t mask = 0;
  for (Vertex v = 0; v < size(); ++v) {
    if (dominated(v)) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

bool GameState::residual_adjacent(Vertex u, Vertex v) const {
  if (colors_[u] == Color::kRed || colors_[v] == Color::kRed) return false;
  if (colors_[u] == Color::kBlue && colors_[v] == Color::kBlue) return false;
  return forest_->adjacent(u, v);
}

int GameState::residual_degree(Vertex v) const {
  if (colors_[v] == Color::kRed) return 0;
  int d = 0;
  for (Vertex u : forest_->neighbors(v)) {
    if (colors_[u] == Color::kRed) continue;
    if (colors_[u] == Color::kBlue && colors_[v] == Color::kBlue) continue;
    ++d;
  }
  return d;
}

ResidualGraph GameState::residual_view() const {
  ResidualGraph g;
  for (Vertex v = 0; v < size(); ++v) {
    if (colors_[v] != Color::kRed) g.vertices.push_back(v);
  }
  for (auto [u, v] : forest_->edges()) {
    if (residual_adjacent(u, v)) g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string GameState::audit() const {
  const auto& f = *forest_;
  int p = 0;
  for (Vertex v = 0; v < size(); ++v) {
    int wc = 0;
    bool nb_white = false;
    if (colors_[v] == Color::kWhite) ++wc;
    for (Vertex u : f.neighbors(v)) {
      if (colors_[u] == Color::kWhite) {
        ++wc;
        nb_white = true;
      }
    }
    if (wc != white_closed_[v]) return "white count mismatch at " + std::to_string(v);
    Color expect = colors_[v] == Color::kWhite ? Color::kWhite
                                               : (nb_white ? Color::kBlue : Color::kRed);
    if (expect != colors_[v]) return "color mismatch at " + std::to_string(v);
    p += color_value(colors_[v]);
  }
  if (p != potential_) return "potential mismatch";
  // Dominated set must equal the union of played closed neighborhoods.
  std::vector<char> dom(size(), 0);
  for (const auto& h : history_) {
    dom[h.vertex] = 1;
    for (Vertex u : f.neighbors(h.vertex)) dom[u] = 1;
  }
  for (Vertex v = 0; v < size(); ++v) {
    if ((dom[v] != 0) != dominated(v)) return "dominated set mismatch at " + std::to_string(v);
  }
  return {};
}

}  // namespace domgame
