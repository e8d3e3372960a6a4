#include <gtest/gtest.h>

#include "lagrangian/cliques.hpp"
#include "oracles.hpp"

using namespace lagrangian;

TEST(Clique, FiveCycle) {
  auto c5 = validate(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  auto r = max_complete_subgraph(c5, {2});
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_FALSE(r.is_unique_max);
}

TEST(Clique, SingletonsRequired) {
  auto h = with_edges(complete(4, {2}), {{2}, {3}});
  auto r = max_complete_subgraph(h, {1, 2});
  EXPECT_EQ(r.order, 2);
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(r.is_unique_max);
  EXPECT_EQ(max_complete_subgraph(complete(4, {2}), {1, 2}).order, 0);
}

TEST(Clique, MixedLevels) {
  // {1,2,3} is complete for {2,3}; {1,2,3,4} fails on missing 3-sets.
  auto h = with_edges(complete(4, {2}), {{1, 2, 3}, {1, 2, 4}});
  EXPECT_EQ(max_complete_subgraph(h, {2, 3}).order, 3);
  EXPECT_EQ(max_complete_subgraph(h, {3}).order, 3);
  EXPECT_EQ(max_complete_subgraph(h, {2}).order, 4);
  EXPECT_TRUE(contains_complete(h, 3, {2, 3}));
  EXPECT_FALSE(contains_complete(h, 4, {2, 3}));
  EXPECT_TRUE(contains_complete(h, 0, {2, 3}));
}

TEST(Clique, EmptyGraph) {
  // Any two vertices fail for {2}; a single vertex is vacuously complete.
  auto r = max_complete_subgraph(validate(3, {}), {2});
  EXPECT_EQ(r.order, 1);
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{1}));
}

TEST(Properties, AgainstBruteForce) {
  Rng rng(11);
  const std::vector<std::vector<int>> families{{2}, {1, 2}, {3}, {2, 3}, {1, 2, 3}, {1, 3}, {2, 4}};
  for (int trial = 0; trial < 300; ++trial) {
    const auto& types = families[trial % families.size()];
    const int n = 2 + static_cast<int>(rng.below(8));
    auto h = oracle::random_graph(rng, n, types, 0.3 + 0.6 * rng.uniform());
    const EdgeTypeSet ts(types);
    auto got = max_complete_subgraph(h, ts);
    auto want = oracle::max_clique(h, types);
    ASSERT_EQ(got.order, want.order) << trial;
    if (want.order > 0) {
      EXPECT_EQ(got.vertices, want.smallest);
      EXPECT_EQ(got.is_unique_max, want.count == 1);
    }
    EXPECT_TRUE(contains_complete(h, want.order, ts));
    EXPECT_FALSE(contains_complete(h, want.order + 1, ts));
    EXPECT_EQ(maximal_complete_subgraphs(h, ts), oracle::maximal_cliques(h, types)) << trial;
  }
}
