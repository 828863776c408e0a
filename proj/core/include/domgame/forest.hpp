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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domgame {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;
using Edge = std::pair<Vertex, Vertex>;

/// A path l1 - u1 - d - u2 - l2 between two leaves, stored with u1 < u2.
struct LeafPath {
  std::array<Vertex, 5> path{};

  Vertex center() const { return path[2]; }
  friend bool operator==(const LeafPath&, const LeafPath&) = default;
  friend auto operator<=>(const LeafPath&, const LeafPath&) = default;
};

struct ClassFlags {
  bool weakly_sk13_free = false;
  bool no_leaves_at_distance4 = false;
  bool disjoint_union_of_edges = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

enum class RootPolicy { kMinIndex, kGiven, kRandom };

/// How each component picks its root. `roots` is consulted under kGiven
/// (one vertex per component); `seed` under kRandom.
struct RootSpec {
  RootPolicy policy = RootPolicy::kMinIndex;
  std::uint64_t seed = 0;
  std::vector<Vertex> roots;

  static RootSpec min_index() { return {}; }
  static RootSpec given(std::vector<Vertex> r) { return {RootPolicy::kGiven, 0, std::move(r)}; }
  static RootSpec random(std::uint64_t s) { return {RootPolicy::kRandom, s, {}}; }
};

/// Immutable forest with one root per component.
///
/// Adjacency is stored in CSR form with sorted neighbor lists. Heights are
/// distances to the component root. The set of length-4 leaf-to-leaf paths
/// is computed once at construction.
class RootedForest {
 public:
  RootedForest() = default;

  /// Validates and builds. Throws InputError on cycles, duplicate edges,
  /// self-loops, out-of-range vertices, isolated vertices (unless
  /// `allow_isolated`), and bad root declarations.
  static RootedForest build(int n, std::vector<Edge> edges, const RootSpec& roots = {},
                            bool allow_isolated = false);

  /// Same graph, new roots.
  RootedForest with_roots(const RootSpec& roots) const;

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool adjacent(Vertex u, Vertex v) const;

  int height(Vertex v) const { return height_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  int component_of(Vertex v) const { return component_[v]; }
  int component_count() const { return static_cast<int>(roots_.size()); }
  const std::vector<Vertex>& roots() const { return roots_; }
  std::vector<std::vector<Vertex>> components() const;

  const std::vector<Vertex>& leaves() const { return leaves_; }
  const std::vector<LeafPath>& p5_paths() const { return p5_paths_; }
  bool has_isolated() const;

  /// Isomorphism-invariant string for the unrooted forest.
  std::string canonical_form() const;

 private:
  void assign_roots(const RootSpec& spec);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<int> component_;
  std::vector<Vertex> roots_;
  std::vector<int> height_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> leaves_;
  std::vector<LeafPath> p5_paths_;
};

/// Parses the line-oriented forest format:
///   # comment / n <count> / e <u> <v> / r <v>
/// Root lines are only used under RootPolicy::kGiven (an explicit `roots`
/// list in the RootSpec takes precedence over the file).
RootedForest parse_forest(std::string_view text, const RootSpec& roots = {},
                          bool allow_isolated = false);

/// True if the text declares at least one `r` line.
bool declares_roots(std::string_view text);

/// Inverse of parse_forest. Root lines are emitted when `with_roots` is set.
std::string format_forest(const RootedForest& f, bool with_roots = false);

ClassFlags classify(const RootedForest& f);

/// All length-4 paths between two leaves, each unordered path once.
std::vector<LeafPath> leaf_paths4(const RootedForest& f);

/// Tie rule for the P5-child when both path neighbors of the center sit
/// strictly below it.
enum class ChildTieRule { kSmallerIndex, kLargerIndex };

struct DangerousPair {
  Vertex related = kNoVertex;   // a1, played by Dominator on election
  Vertex p5_child = kNoVertex;  // a2, strictly higher than the center
  bool tie_broken = false;      // both neighbors qualified as a2
};

/// The two neighbors of `d` shared by every leaf path centered at `d`.
/// Throws StrategyError if `d` centers no leaf path, or if more than two
/// neighbors carry leaf paths (the forest is not weakly S(K1,3)-free).
DangerousPair dangerous_pair(const RootedForest& f, Vertex d,
                             ChildTieRule rule = ChildTieRule::kSmallerIndex);

}  // namespace domgame
