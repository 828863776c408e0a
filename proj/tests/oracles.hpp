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

// Slow, independent reference implementations used as test oracles. None of
// them call into the library beyond RootedForest construction.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "domgame/forest.hpp"

namespace domgame::oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(int n, const std::vector<Edge>& edges) {
  Adj g(n);
  for (auto [u, v] : edges) {
    g[u].push_back(v);
    g[v].push_back(u);
  }
  return g;
}

inline Adj adjacency(const RootedForest& f) { return adjacency(f.size(), f.edges()); }

/// Textbook Pruefer decoding with a linear scan for the smallest leaf.
inline std::vector<Edge> pruefer_tree(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --deg[leaf];
        --deg[x];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (a < 0) a = v;
      else edges.emplace_back(a, v);
    }
  }
  return edges;
}

/// AHU encoding of the tree rooted at `r`.
inline std::string ahu(const Adj& g, int r, int parent) {
  std::vector<std::string> kids;
  for (int c : g[r]) {
    if (c != parent) kids.push_back(ahu(g, c, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

/// Minimum AHU code over the tree's centers (found by peeling leaves): an
/// isomorphism invariant of free trees.
inline std::string tree_code(const Adj& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : g[v]) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int r : layer) {
    std::string c = ahu(g, r, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

/// Number of free trees on n vertices, by deduplicating all labeled trees.
inline int brute_tree_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    seen.insert(tree_code(adjacency(n, pruefer_tree(seq))));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return static_cast<int>(seen.size());
}

/// Induced subdivided claw on seven vertices whose tips are leaves of F.
inline bool brute_has_leaf_tipped_claw(const Adj& g) {
  const int n = static_cast<int>(g.size());
  if (n < 7) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - 7, pick.end(), 1);
  do {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) s.push_back(v);
    }
    int edges = 0;
    std::vector<int> deg(7, 0);
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) {
        if (std::find(g[s[i]].begin(), g[s[i]].end(), s[j]) != g[s[i]].end()) {
          ++edges;
          ++deg[i];
          ++deg[j];
        }
      }
    }
    // A 7-vertex tree with degree multiset {3,2,2,2,1,1,1} and no vertex of
    // degree 2 adjacent to two degree-2 vertices is the subdivided claw; in
    // a forest every induced subgraph with 6 edges on 7 vertices is a tree.
    if (edges != 6) continue;
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{1, 1, 1, 2, 2, 2, 3}) continue;
    int hub = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    bool hub_to_twos = true;
    for (int j = 0; j < 7; ++j) {
      if (j == hub) continue;
      const bool adj = std::find(g[s[hub]].begin(), g[s[hub]].end(), s[j]) != g[s[hub]].end();
      if (adj && deg[j] != 2) hub_to_twos = false;
    }
    if (!hub_to_twos) continue;
    bool tips_are_leaves = true;
    for (int j = 0; j < 7; ++j) {
      if (deg[j] == 1 && g[s[j]].size() != 1) tips_are_leaves = false;
    }
    if (tips_are_leaves) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Plain minimax with no memo: remaining moves under optimal play.
inline int brute_game_value(const Adj& g, std::vector<char>& dom, bool staller) {
  const int n = static_cast<int>(g.size());
  int best = -1;
  for (int v = 0; v < n; ++v) {
    std::vector<int> fresh;
    if (!dom[v]) fresh.push_back(v);
    for (int u : g[v]) {
      if (!dom[u]) fresh.push_back(u);
    }
    if (fresh.empty()) continue;
    for (int x : fresh) dom[x] = 1;
    const int val = 1 + brute_game_value(g, dom, !staller);
    for (int x : fresh) dom[x] = 0;
    if (best < 0 || (staller ? val > best : val < best)) best = val;
  }
  return best < 0 ? 0 : best;
}

inline int brute_game_value(const Adj& g, bool staller_first) {
  std::vector<char> dom(g.size(), 0);
  return brute_game_value(g, dom, staller_first);
}

}  // namespace domgame::oracle
