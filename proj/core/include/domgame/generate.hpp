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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/forest.hpp"

namespace domgame {

enum class Family {
  kFig2a,        // m blocks of P5, centers joined in a path
  kFig2b,        // fig2a plus a pendant leaf on the first center
  kPath,         // P_n
  kStar,         // K_{1,k}
  kDoubleStar,   // two adjacent centers with p and q leaves
  kSpider,       // center with legs of the given lengths
  kRandomTree,   // uniform labeled tree (Pruefer decoding)
  kWeaklyFree,   // random weakly S(K1,3)-free tree by guarded leaf growth
};

struct FamilySpec {
  Family family = Family::kPath;
  std::vector<long long> params;
};

/// Parses "fig2a:3", "spider:2,2,1", "random:20:7" (n then seed), ...
FamilySpec parse_family(std::string_view text);
std::string family_name(Family f);

RootedForest generate_family(const FamilySpec& spec, const RootSpec& roots = {});

RootedForest fig2a(int m);
RootedForest fig2b(int m);
RootedForest path_graph(int n);
RootedForest star(int k);
RootedForest double_star(int p, int q);
RootedForest spider(const std::vector<int>& legs);
RootedForest random_tree(int n, std::uint64_t seed);
RootedForest random_weakly_free_tree(int n, std::uint64_t seed);

/// Tree with the given Pruefer sequence on n = seq.size() + 2 vertices.
std::vector<Edge> pruefer_decode(const std::vector<Vertex>& seq);

// -- Free-tree enumeration -------------------------------------------------

inline constexpr int kMaxEnumerationOrder = 24;

/// Yields one tree per isomorphism class of free trees on n vertices, using
/// canonical level sequences (each tree rooted at a center). Vertex 0 is the
/// level-sequence root. Single consumer.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n);
  std::optional<RootedForest> next();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> layout_;
};

std::vector<RootedForest> enumerate_trees(int n);

}  // namespace domgame
