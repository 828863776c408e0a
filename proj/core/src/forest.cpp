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

#include "domgame/forest.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "domgame/error.hpp"

namespace domgame {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string edge_text(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

// AHU encoding of the subtree hanging at `v` (coming from `from`).
std::string ahu(const RootedForest& f, Vertex v, Vertex from) {
  std::vector<std::string> kids;
  for (Vertex u : f.neighbors(v)) {
    if (u != from) kids.push_back(ahu(f, u, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

std::vector<Vertex> tree_centers(const RootedForest& f, const std::vector<Vertex>& comp) {
  if (comp.size() <= 2) return comp;
  std::vector<int> deg(f.size(), 0);
  std::vector<Vertex> layer;
  for (Vertex v : comp) {
    deg[v] = f.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = comp.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex u : f.neighbors(v)) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

RootedForest RootedForest::build(int n, std::vector<Edge> edges, const RootSpec& roots,
                                 bool allow_isolated) {
  if (n < 1) throw InputError("forest must have at least one vertex");
  RootedForest f;
  f.n_ = n;
  std::set<Edge> seen;
  DisjointSets dsu(n);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("vertex index out of range in edge " + edge_text(u, v));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw InputError("duplicate edge " + edge_text(u, v));
    if (!dsu.unite(u, v)) throw InputError("cycle detected at edge " + edge_text(u, v));
  }
  f.edges_ = std::move(edges);

  std::vector<int> deg(n, 0);
  for (auto [u, v] : f.edges_) {
    ++deg[u];
    ++deg[v];
  }
  f.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) f.offsets_[v + 1] = f.offsets_[v] + deg[v];
  f.adj_.assign(f.offsets_[n], 0);
  std::vector<int> fill(f.offsets_.begin(), f.offsets_.end() - 1);
  for (auto [u, v] : f.edges_) {
    f.adj_[fill[u]++] = v;
    f.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(f.adj_.begin() + f.offsets_[v], f.adj_.begin() + f.offsets_[v + 1]);
    if (deg[v] == 0 && !allow_isolated) {
      throw InputError("isolated vertex " + std::to_string(v));
    }
    if (deg[v] == 1) f.leaves_.push_back(v);
  }

  f.component_.assign(n, -1);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (f.component_[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    f.component_[s] = comps;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : f.neighbors(v)) {
        if (f.component_[u] < 0) {
          f.component_[u] = comps;
          stack.push_back(u);
        }
      }
    }
    ++comps;
  }
  f.roots_.assign(comps, kNoVertex);
  f.assign_roots(roots);
  f.p5_paths_ = leaf_paths4(f);
  return f;
}

void RootedForest::assign_roots(const RootSpec& spec) {
  const int comps = component_count();
  auto members = components();
  switch (spec.policy) {
    case RootPolicy::kMinIndex:
      for (int c = 0; c < comps; ++c) roots_[c] = members[c].front();
      break;
    case RootPolicy::kGiven: {
      if (static_cast<int>(spec.roots.size()) != comps) {
        throw InputError("missing root: expected " + std::to_string(comps) + " root(s), got " +
                         std::to_string(spec.roots.size()));
      }
      std::fill(roots_.begin(), roots_.end(), kNoVertex);
      for (Vertex r : spec.roots) {
        if (r < 0 || r >= n_) throw InputError("root " + std::to_string(r) + " out of range");
        int c = component_[r];
        if (roots_[c] != kNoVertex) {
          throw InputError("two roots declared for the component of vertex " + std::to_string(r));
        }
        roots_[c] = r;
      }
      break;
    }
    case RootPolicy::kRandom: {
      std::mt19937_64 rng(spec.seed);
      for (int c = 0; c < comps; ++c) {
        std::uniform_int_distribution<std::size_t> pick(0, members[c].size() - 1);
        roots_[c] = members[c][pick(rng)];
      }
      break;
    }
  }

  height_.assign(n_, -1);
  parent_.assign(n_, kNoVertex);
  std::queue<Vertex> queue;
  for (Vertex r : roots_) {
    height_[r] = 0;
    queue.push(r);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex u : neighbors(v)) {
      if (height_[u] < 0) {
        height_[u] = height_[v] + 1;
        parent_[u] = v;
        queue.push(u);
      }
    }
  }
}

RootedForest RootedForest::with_roots(const RootSpec& roots) const {
  RootedForest copy = *this;
  copy.assign_roots(roots);
  return copy;
}

bool RootedForest::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::vector<Vertex>> RootedForest::components() const {
  std::vector<std::vector<Vertex>> out(component_count());
  for (Vertex v = 0; v < n_; ++v) out[component_[v]].push_back(v);
  return out;
}

bool RootedForest::has_isolated() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) == 0) return true;
  }
  return false;
}

std::string RootedForest::canonical_form() const {
  std::vector<std::string> parts;
  for (const auto& comp : components()) {
    auto centers = tree_centers(*this, comp);
    if (centers.size() == 2) {
      // Bicentral: root at the central edge and order the two halves.
      std::string a = ahu(*this, centers[0], centers[1]);
      std::string b = ahu(*this, centers[1], centers[0]);
      if (b < a) std::swap(a, b);
      parts.push_back("[" + a + b + "]");
    } else {
      parts.push_back(ahu(*this, centers[0], kNoVertex));
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += p;
  return out;
}

bool declares_roots(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok == "r") return true;
  }
  return false;
}

RootedForest parse_forest(std::string_view text, const RootSpec& roots, bool allow_isolated) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<Vertex> declared;

  auto fail = [&](const std::string& why) {
    throw InputError("line " + std::to_string(lineno) + ": " + why);
  };
  auto read_int = [&](std::istringstream& ls) -> long long {
    std::string tok;
    if (!(ls >> tok)) fail("missing integer");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("not an integer: '" + tok + "'");
    return value;
  };
  auto vertex = [&](long long v) -> Vertex {
    if (v < 0 || v >= n) fail("vertex index out of range: " + std::to_string(v));
    return static_cast<Vertex>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "n") {
      if (n >= 0) fail("duplicate n directive");
      long long count = read_int(ls);
      if (count < 1 || count > 1'000'000) fail("vertex count out of range");
      n = static_cast<int>(count);
    } else if (directive == "e") {
      if (n < 0) fail("edge before n directive");
      Vertex u = vertex(read_int(ls));
      Vertex v = vertex(read_int(ls));
      edges.emplace_back(u, v);
    } else if (directive == "r") {
      if (n < 0) fail("root before n directive");
      declared.push_back(vertex(read_int(ls)));
    } else {
      fail("unknown directive '" + directive + "'");
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#') fail("trailing token '" + extra + "'");
  }
  if (n < 0) throw InputError("missing n directive");

  RootSpec spec = roots;
  if (spec.policy == RootPolicy::kGiven && spec.roots.empty()) spec.roots = declared;
  return RootedForest::build(n, std::move(edges), spec, allow_isolated);
}

std::string format_forest(const RootedForest& f, bool with_roots) {
  std::ostringstream out;
  out << "n " << f.size() << "\n";
  for (auto [u, v] : f.edges()) out << "e " << u << " " << v << "\n";
  if (with_roots) {
    for (Vertex r : f.roots()) out << "r " << r << "\n";
  }
  return out.str();
}

namespace {

// Neighbors of d that own a leaf other than d itself.
std::vector<Vertex> stem_neighbors(const RootedForest& f, Vertex d) {
  std::vector<Vertex> out;
  for (Vertex u : f.neighbors(d)) {
    for (Vertex l : f.neighbors(u)) {
      if (l != d && f.is_leaf(l)) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ClassFlags classify(const RootedForest& f) {
  ClassFlags flags;
  const bool isolate_free = !f.has_isolated();
  bool claw = false;
  for (Vertex d = 0; d < f.size() && !claw; ++d) {
    if (f.degree(d) >= 3 && stem_neighbors(f, d).size() >= 3) claw = true;
  }
  flags.weakly_sk13_free = isolate_free && !claw;
  flags.no_leaves_at_distance4 = isolate_free && f.p5_paths().empty();
  bool edges_only = true;
  for (Vertex v = 0; v < f.size(); ++v) {
    if (f.degree(v) != 1 || f.degree(f.neighbors(v)[0]) != 1) {
      edges_only = false;
      break;
    }
  }
  flags.disjoint_union_of_edges = edges_only;
  return flags;
}

std::vector<LeafPath> leaf_paths4(const RootedForest& f) {
  std::vector<LeafPath> out;
  for (Vertex d = 0; d < f.size(); ++d) {
    auto stems = stem_neighbors(f, d);
    for (std::size_t i = 0; i < stems.size(); ++i) {
      for (std::size_t j = i + 1; j < stems.size(); ++j) {
        Vertex u1 = stems[i];
        Vertex u2 = stems[j];
        for (Vertex l1 : f.neighbors(u1)) {
          if (l1 == d || !f.is_leaf(l1)) continue;
          for (Vertex l2 : f.neighbors(u2)) {
            if (l2 == d || !f.is_leaf(l2)) continue;
            out.push_back(LeafPath{{l1, u1, d, u2, l2}});
          }
        }
      }
    }
  }
  return out;
}

DangerousPair dangerous_pair(const RootedForest& f, Vertex d, ChildTieRule rule) {
  if (d < 0 || d >= f.size()) throw StrategyError("vertex out of range");
  auto stems = stem_neighbors(f, d);
  if (stems.size() < 2) {
    throw StrategyError("vertex " + std::to_string(d) + " is not the center of a leaf path");
  }
  if (stems.size() > 2) {
    throw StrategyError("vertex " + std::to_string(d) +
                        " has more than two leaf-path neighbors; forest is not weakly "
                        "S(K1,3)-free");
  }
  Vertex x = stems[0];
  Vertex y = stems[1];  // x < y: neighbor lists are sorted
  const int hd = f.height(d);
  const bool x_up = f.height(x) > hd;
  const bool y_up = f.height(y) > hd;
  DangerousPair pair;
  if (x_up && y_up) {
    pair.tie_broken = true;
    Vertex child;
    if (f.height(x) != f.height(y)) {
      child = f.height(x) > f.height(y) ? x : y;
    } else {
      child = rule == ChildTieRule::kSmallerIndex ? x : y;
    }
    pair.p5_child = child;
    pair.related = child == x ? y : x;
  } else if (x_up) {
    pair.p5_child = x;
    pair.related = y;
  } else if (y_up) {
    pair.p5_child = y;
    pair.related = x;
  } else {
    // Two neighbors at height <= h(d) cannot both exist in a rooted tree.
    throw StrategyError("no neighbor of " + std::to_string(d) + " lies above it");
  }
  return pair;
}

}  // namespace domgame
