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

#include "domgame/generate.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

#include "domgame/error.hpp"

namespace domgame {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("invalid family parameters: " + what);
}

}  // namespace

RootedForest fig2a(int m) {
  require(m >= 1, "fig2a needs m >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < 4; ++j) edges.emplace_back(5 * i + j, 5 * i + j + 1);
    if (i + 1 < m) edges.emplace_back(5 * i + 2, 5 * (i + 1) + 2);
  }
  return RootedForest::build(5 * m, std::move(edges));
}

RootedForest fig2b(int m) {
  require(m >= 1, "fig2b needs m >= 1");
  std::vector<Edge> edges = fig2a(m).edges();
  edges.emplace_back(2, 5 * m);
  return RootedForest::build(5 * m + 1, std::move(edges));
}

RootedForest path_graph(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return RootedForest::build(n, std::move(edges));
}

RootedForest star(int k) {
  require(k >= 1, "star needs k >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
  return RootedForest::build(k + 1, std::move(edges));
}

RootedForest double_star(int p, int q) {
  require(p >= 0 && q >= 0, "double_star needs p, q >= 0");
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int i = 0; i < p; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < q; ++i) edges.emplace_back(1, next++);
  return RootedForest::build(next, std::move(edges));
}

RootedForest spider(const std::vector<int>& legs) {
  require(!legs.empty(), "spider needs at least one leg");
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    require(len >= 1, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return RootedForest::build(next, std::move(edges));
}

std::vector<Edge> pruefer_decode(const std::vector<Vertex>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (Vertex v : seq) {
    if (v < 0 || v >= n) throw InputError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

RootedForest random_tree(int n, std::uint64_t seed) {
  require(n >= 2, "random tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = pick(rng);
  return RootedForest::build(n, pruefer_decode(seq));
}

namespace {

using AdjList = std::vector<std::vector<Vertex>>;

bool has_leaf_other_than(const AdjList& adj, Vertex u, Vertex d) {
  for (Vertex l : adj[u]) {
    if (l != d && adj[l].size() == 1) return true;
  }
  return false;
}

// Only vertices within distance 2 of `x` can gain a third stem neighbor.
bool claw_near(const AdjList& adj, Vertex x) {
  std::vector<Vertex> around{x};
  for (Vertex u : adj[x]) {
    around.push_back(u);
    for (Vertex w : adj[u]) around.push_back(w);
  }
  for (Vertex d : around) {
    int stems = 0;
    for (Vertex u : adj[d]) stems += has_leaf_other_than(adj, u, d) ? 1 : 0;
    if (stems >= 3) return true;
  }
  return false;
}

}  // namespace

RootedForest random_weakly_free_tree(int n, std::uint64_t seed) {
  require(n >= 2, "weakly-free tree needs n >= 2");
  std::mt19937_64 rng(seed);
  AdjList adj(n);
  adj[0].push_back(1);
  adj[1].push_back(0);
  auto attach = [&](Vertex p, Vertex x) {
    adj[p].push_back(x);
    adj[x].push_back(p);
  };
  auto detach = [&](Vertex p, Vertex x) {
    adj[p].pop_back();
    adj[x].pop_back();
  };
  for (Vertex x = 2; x < n; ++x) {
    std::vector<Vertex> order(x);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    bool placed = false;
    for (Vertex p : order) {
      attach(p, x);
      if (!claw_near(adj, x)) {
        placed = true;
        break;
      }
      detach(p, x);
    }
    if (!placed) throw StrategyError("weakly-free growth got stuck");
  }
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : adj[v]) {
      if (v < u) edges.emplace_back(label[v], label[u]);
    }
  }
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
  });
  return RootedForest::build(n, std::move(edges));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kFig2a: return "fig2a";
    case Family::kFig2b: return "fig2b";
    case Family::kPath: return "path";
    case Family::kStar: return "star";
    case Family::kDoubleStar: return "double-star";
    case Family::kSpider: return "spider";
    case Family::kRandomTree: return "random";
    case Family::kWeaklyFree: return "weakly-free";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  auto sep = text.find(':');
  std::string name(text.substr(0, sep));
  FamilySpec spec;
  if (name == "fig2a") spec.family = Family::kFig2a;
  else if (name == "fig2b") spec.family = Family::kFig2b;
  else if (name == "path") spec.family = Family::kPath;
  else if (name == "star") spec.family = Family::kStar;
  else if (name == "double-star" || name == "double_star") spec.family = Family::kDoubleStar;
  else if (name == "spider") spec.family = Family::kSpider;
  else if (name == "random") spec.family = Family::kRandomTree;
  else if (name == "weakly-free") spec.family = Family::kWeaklyFree;
  else throw InputError("unknown family '" + name + "'");

  if (sep != std::string_view::npos) {
    std::string_view rest = text.substr(sep + 1);
    while (!rest.empty()) {
      auto cut = rest.find_first_of(":,");
      std::string_view tok = rest.substr(0, cut);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError("bad family parameter '" + std::string(tok) + "'");
      }
      spec.params.push_back(value);
      if (cut == std::string_view::npos) break;
      rest = rest.substr(cut + 1);
    }
  }
  return spec;
}

RootedForest generate_family(const FamilySpec& spec, const RootSpec& roots) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, family_name(spec.family) + " expects " + std::to_string(k) +
                               " parameter(s)");
  };
  auto small = [&](long long v) {
    require(v >= 0 && v <= 100000, "parameter out of range");
    return static_cast<int>(v);
  };
  RootedForest f;
  switch (spec.family) {
    case Family::kFig2a: arity(1); f = fig2a(small(p[0])); break;
    case Family::kFig2b: arity(1); f = fig2b(small(p[0])); break;
    case Family::kPath: arity(1); f = path_graph(small(p[0])); break;
    case Family::kStar: arity(1); f = star(small(p[0])); break;
    case Family::kDoubleStar: arity(2); f = double_star(small(p[0]), small(p[1])); break;
    case Family::kSpider: {
      std::vector<int> legs;
      for (long long v : p) legs.push_back(small(v));
      f = spider(legs);
      break;
    }
    case Family::kRandomTree:
      arity(2);
      f = random_tree(small(p[0]), static_cast<std::uint64_t>(p[1]));
      break;
    case Family::kWeaklyFree:
      arity(2);
      f = random_weakly_free_tree(small(p[0]), static_cast<std::uint64_t>(p[1]));
      break;
  }
  if (roots.policy != RootPolicy::kMinIndex) f = f.with_roots(roots);
  return f;
}

// -- Free-tree enumeration (Wright, Richmond, Odlyzko, McKay) ---------------

namespace {

using Layout = std::vector<int>;

// Beyer-Hedetniemi successor of a canonical rooted level sequence. `p` is
// the position to increment from; negative means "last non-1 entry".
std::optional<Layout> next_rooted(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (p > 0 && pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

// Splits off the leftmost root subtree (levels shifted down by one).
std::pair<Layout, Layout> split_left(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_free(const Layout& candidate) {
  auto [left, rest] = split_left(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const int p = static_cast<int>(left.size());
  auto jumped = next_rooted(candidate, p);
  if (!jumped) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_left(*jumped);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    for (int i = 0; i < h + 1; ++i) (*jumped)[jumped->size() - (h + 1) + i] = i + 1;
  }
  return jumped;
}

RootedForest layout_to_tree(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), static_cast<Vertex>(i));
    stack.push_back(static_cast<Vertex>(i));
  }
  return RootedForest::build(static_cast<int>(layout.size()), std::move(edges), {},
                             layout.size() == 1);
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw InputError("tree enumeration supports 1 <= n <= " +
                     std::to_string(kMaxEnumerationOrder));
  }
}

std::optional<RootedForest> FreeTreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return layout_to_tree(n_ == 1 ? Layout{0} : Layout{0, 1});
  }
  std::optional<Layout> candidate;
  if (!started_) {
    started_ = true;
    Layout path;
    for (int i = 0; i <= n_ / 2; ++i) path.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i) path.push_back(i);
    candidate = path;
  } else {
    candidate = next_rooted(layout_);
  }
  if (candidate) candidate = next_free(*candidate);
  if (!candidate) {
    done_ = true;
    return std::nullopt;
  }
  layout_ = *candidate;
  return layout_to_tree(layout_);
}

std::vector<RootedForest> enumerate_trees(int n) {
  std::vector<RootedForest> out;
  FreeTreeEnumerator it(n);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace domgame
