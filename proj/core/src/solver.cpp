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

#include "domgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "domgame/error.hpp"

namespace domgame {

std::optional<int> SharedTable::find(std::uint64_t key) const {
  const auto& shard = shards_[key % kShards];
  std::shared_lock lock(shard.mu);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  return it->second;
}

void SharedTable::insert(std::uint64_t key, int value) {
  auto& shard = shards_[key % kShards];
  std::unique_lock lock(shard.mu);
  shard.map.emplace(key, static_cast<std::int8_t>(value));
}

std::size_t SharedTable::size() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) {
    std::shared_lock lock(shard.mu);
    total += shard.map.size();
  }
  return total;
}

ExactSolver::ExactSolver(const RootedForest& f, int cap, std::shared_ptr<SharedTable> shared)
    : n_(f.size()), shared_(std::move(shared)) {
  cap = std::min(cap, kHardSolverCap);
  if (n_ > cap) {
    throw CapacityError("exact solver cap exceeded: n=" + std::to_string(n_) +
                        " > " + std::to_string(cap));
  }
  if (f.has_isolated()) throw GameError("exact solver needs an isolate-free forest");
  full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  closed_.assign(n_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    closed_[v] |= std::uint64_t{1} << v;
    for (Vertex u : f.neighbors(v)) closed_[v] |= std::uint64_t{1} << u;
  }
}

int ExactSolver::potential(std::uint64_t dom) const {
  int p = 0;
  for (int v = 0; v < n_; ++v) {
    if (!(dom >> v & 1)) p += 3;
    else if (closed_[v] & ~dom) p += 2;
  }
  return p;
}

int ExactSolver::search(std::uint64_t dom, bool staller) {
  if (dom == full_) return 0;
  const std::uint64_t key = (dom << 1) | (staller ? 1u : 0u);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (shared_) {
    if (auto v = shared_->find(key)) {
      memo_.emplace(key, static_cast<std::int8_t>(*v));
      return *v;
    }
  }
  ++nodes_;

  // Highest gain first; lets Dominator stop at a finishing move early.
  const int here = potential(dom);
  struct Child {
    std::uint64_t next;
    int gain;
    int v;
  };
  std::vector<Child> kids;
  for (int v = 0; v < n_; ++v) {
    if (closed_[v] & ~dom) {
      const std::uint64_t next = dom | closed_[v];
      kids.push_back({next, here - potential(next), v});
    }
  }
  std::stable_sort(kids.begin(), kids.end(),
                   [](const Child& a, const Child& b) { return a.gain > b.gain; });

  // Every move dominates at least one new vertex.
  const int ceiling = std::popcount(full_ & ~dom);
  int best = staller ? 0 : 1 << 20;
  for (const auto& c : kids) {
    const int val = 1 + search(c.next, !staller);
    if (staller) {
      best = std::max(best, val);
      if (best == ceiling) break;
    } else {
      best = std::min(best, val);
      if (best == 1) break;
    }
  }
  memo_.emplace(key, static_cast<std::int8_t>(best));
  if (shared_) shared_->insert(key, best);
  return best;
}

int ExactSolver::value(StateKey key) {
  return search(key.dominated & full_, key.to_move == Player::kStaller);
}

SolveResult ExactSolver::solve(StateKey key) {
  const std::uint64_t before = nodes_;
  SolveResult r;
  const std::uint64_t dom = key.dominated & full_;
  const bool staller = key.to_move == Player::kStaller;
  r.value = search(dom, staller);
  if (r.value > 0) {
    for (int v = 0; v < n_; ++v) {
      if (!(closed_[v] & ~dom)) continue;
      if (1 + search(dom | closed_[v], !staller) == r.value) {
        r.principal_move = v;
        break;
      }
    }
  }
  r.nodes = nodes_ - before;
  return r;
}

SolveResult ExactSolver::solve(const GameState& s) {
  return solve(StateKey{s.dominated_mask(), s.to_move()});
}

int game_value(const RootedForest& f, Player first, int cap) {
  ExactSolver solver(f, cap);
  return solver.value({0, first});
}

int game_value(const RootedForest& f, GameType g, int cap) {
  return game_value(f, first_player(g), cap);
}

Vertex best_move(const RootedForest& f, const GameState& s, int cap) {
  if (s.over()) throw GameError("game is over");
  ExactSolver solver(f, cap);
  return *solver.solve(s).principal_move;
}

}  // namespace domgame
