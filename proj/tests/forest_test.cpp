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

#include <gtest/gtest.h>

#include <set>

#include "domgame/error.hpp"
#include "domgame/forest.hpp"
#include "domgame/generate.hpp"
#include "oracles.hpp"

namespace domgame {
namespace {

RootedForest p5(RootSpec roots = {}) {
  return RootedForest::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, roots);
}

// Hub 0 with legs 0-1-2, 0-3-4, 0-5-6.
RootedForest claw() {
  return RootedForest::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

TEST(ParseForest, SingleEdge) {
  auto f = parse_forest("n 2\ne 0 1\n");
  EXPECT_EQ(f.size(), 2);
  EXPECT_EQ(f.roots(), std::vector<Vertex>{0});
  EXPECT_EQ(f.height(0), 0);
  EXPECT_EQ(f.height(1), 1);
}

TEST(ParseForest, PathHeights) {
  auto f = parse_forest("n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(f.height(v), v);
}

TEST(ParseForest, CycleRejected) {
  try {
    parse_forest("n 3\ne 0 1\ne 1 2\ne 2 0\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle detected"), std::string::npos);
  }
}

TEST(ParseForest, StrictValidation) {
  EXPECT_THROW(parse_forest("n 3\ne 0 1\n"), InputError);             // isolated vertex
  EXPECT_THROW(parse_forest("n 2\ne 0 2\n"), InputError);             // out of range
  EXPECT_THROW(parse_forest("n 2\ne 0 0\n"), InputError);             // self-loop
  EXPECT_THROW(parse_forest("n 2\ne 0 1\ne 1 0\n"), InputError);      // duplicate
  EXPECT_THROW(parse_forest("n 2\nx 0 1\n"), InputError);             // unknown directive
  EXPECT_THROW(parse_forest("e 0 1\n"), InputError);                  // missing n
  EXPECT_NO_THROW(parse_forest("# comment\nn 2\n\ne 0 1\n"));
}

TEST(ParseForest, ErrorsCarryLineNumbers) {
  try {
    parse_forest("n 2\nbogus\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseForest, GivenRoots) {
  const std::string text = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\nr 2\n";
  EXPECT_TRUE(declares_roots(text));
  auto f = parse_forest(text, RootSpec{RootPolicy::kGiven, 0, {}});
  EXPECT_EQ(f.roots(), std::vector<Vertex>{2});
  EXPECT_EQ(f.height(0), 2);
  EXPECT_EQ(f.height(4), 2);
  auto g = parse_forest(text);  // min-index policy ignores r lines
  EXPECT_EQ(g.roots(), std::vector<Vertex>{0});
  EXPECT_THROW(parse_forest("n 4\ne 0 1\ne 2 3\nr 0\n", RootSpec{RootPolicy::kGiven, 0, {}}),
               InputError);
}

TEST(ParseForest, RandomRootsAreReproducible) {
  auto a = p5(RootSpec::random(11));
  auto b = p5(RootSpec::random(11));
  EXPECT_EQ(a.roots(), b.roots());
}

TEST(ParseForest, FormatRoundTrip) {
  auto f = RootedForest::build(6, {{0, 1}, {2, 3}, {3, 4}, {3, 5}}, RootSpec::given({1, 4}));
  auto g = parse_forest(format_forest(f, true), RootSpec{RootPolicy::kGiven, 0, {}});
  EXPECT_EQ(g.edges(), f.edges());
  EXPECT_EQ(g.roots(), f.roots());
}

TEST(Classify, PathOnFour) {
  auto c = classify(path_graph(4));
  EXPECT_TRUE(c.weakly_sk13_free);
  EXPECT_TRUE(c.no_leaves_at_distance4);
}

TEST(Classify, SubdividedClaw) {
  auto c = classify(claw());
  EXPECT_FALSE(c.weakly_sk13_free);
  EXPECT_FALSE(c.no_leaves_at_distance4);
}

TEST(Classify, ThreeBlockExtremalTree) {
  auto c = classify(fig2a(3));
  EXPECT_TRUE(c.weakly_sk13_free);
  EXPECT_FALSE(c.no_leaves_at_distance4);
}

TEST(Classify, DisjointEdges) {
  auto f = RootedForest::build(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(classify(f).disjoint_union_of_edges);
  EXPECT_FALSE(classify(path_graph(3)).disjoint_union_of_edges);
}

TEST(Classify, ClawTipsMustBeLeavesOfTheForest) {
  auto f = RootedForest::build(8, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}});
  EXPECT_TRUE(classify(f).weakly_sk13_free);  // 5 has no leaf neighbor
  auto g = RootedForest::build(8, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {5, 7}});
  EXPECT_FALSE(classify(g).weakly_sk13_free);
}

TEST(LeafPaths, PathOnFive) {
  auto paths = leaf_paths4(p5());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].path, (std::array<Vertex, 5>{0, 1, 2, 3, 4}));
  EXPECT_EQ(paths[0].center(), 2);
}

TEST(LeafPaths, PathOnFourHasNone) { EXPECT_TRUE(leaf_paths4(path_graph(4)).empty()); }

TEST(LeafPaths, ClawHasThreeHubPaths) {
  auto paths = leaf_paths4(claw());
  ASSERT_EQ(paths.size(), 3u);
  for (const auto& p : paths) EXPECT_EQ(p.center(), 0);
}

TEST(DangerousPair, PathRootedAtEnd) {
  auto pair = dangerous_pair(p5(), 2);
  EXPECT_EQ(pair.related, 1);
  EXPECT_EQ(pair.p5_child, 3);
  EXPECT_FALSE(pair.tie_broken);
}

TEST(DangerousPair, SpiderWithPendantLeaf) {
  // Center 0, legs 0-1-2 and 0-3-4, pendant leaf 5; rooted at the center.
  auto f = RootedForest::build(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  auto pair = dangerous_pair(f, 0);
  EXPECT_TRUE(pair.tie_broken);
  EXPECT_EQ(pair.p5_child, 1);
  EXPECT_EQ(pair.related, 3);
  auto alt = dangerous_pair(f, 0, ChildTieRule::kLargerIndex);
  EXPECT_EQ(alt.p5_child, 3);
  EXPECT_EQ(alt.related, 1);
}

TEST(DangerousPair, PathRootedAtCenter) {
  auto pair = dangerous_pair(p5(RootSpec::given({2})), 2);
  EXPECT_TRUE(pair.tie_broken);
  EXPECT_EQ(pair.p5_child, 1);
  EXPECT_EQ(pair.related, 3);
}

TEST(DangerousPair, Errors) {
  EXPECT_THROW(dangerous_pair(p5(), 1), StrategyError);
  EXPECT_THROW(dangerous_pair(claw(), 0), StrategyError);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  auto a = RootedForest::build(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
  auto b = RootedForest::build(6, {{5, 4}, {4, 3}, {3, 2}, {4, 1}, {1, 0}});
  EXPECT_EQ(a.canonical_form(), b.canonical_form());
  EXPECT_NE(a.canonical_form(), path_graph(6).canonical_form());
}

// Brute-force claw search over all 7-vertex subsets, all trees n <= 10.
TEST(ClassifyProperty, MatchesInducedSubgraphSearch) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const bool brute = !oracle::brute_has_leaf_tipped_claw(oracle::adjacency(t));
      EXPECT_EQ(classify(t).weakly_sk13_free, brute) << format_forest(t);
    }
  }
}

// Every leaf path centered at d runs through both dangerous-pair vertices.
TEST(ClassifyProperty, DangerousPairLiesOnEveryCenteredPath) {
  for (int n = 5; n <= 10; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (!classify(t).weakly_sk13_free) continue;
      for (Vertex root = 0; root < n; ++root) {
        auto f = t.with_roots(RootSpec::given({root}));
        for (const auto& p : f.p5_paths()) {
          auto pair = dangerous_pair(f, p.center());
          EXPECT_TRUE(std::find(p.path.begin(), p.path.end(), pair.related) != p.path.end());
          EXPECT_TRUE(std::find(p.path.begin(), p.path.end(), pair.p5_child) != p.path.end());
          EXPECT_GT(f.height(pair.p5_child), f.height(p.center()));
        }
      }
    }
  }
}

TEST(ClassifyProperty, NoDistanceFourLeavesImpliesWeaklyFree) {
  for (int n = 2; n <= 13; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      auto c = classify(t);
      if (c.no_leaves_at_distance4) EXPECT_TRUE(c.weakly_sk13_free);
    }
  }
}

TEST(Forest, ComponentsAndLeaves) {
  auto f = RootedForest::build(7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}, {4, 5}});
  EXPECT_EQ(f.component_count(), 2);
  EXPECT_EQ(f.leaves(), (std::vector<Vertex>{0, 1, 2, 6}));
  EXPECT_TRUE(f.adjacent(3, 4));
  EXPECT_FALSE(f.adjacent(0, 2));
  EXPECT_EQ(f.parent(3), 2);
}

}  // namespace
}  // namespace domgame
