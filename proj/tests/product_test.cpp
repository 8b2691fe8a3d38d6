#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

namespace spanlab {
namespace {

using testing::cycle;
using testing::path;

TEST(PairGraph, CycleFourVertexCounts) {
  // Oracle: filter all 16 ordered pairs of C_4 by distance.
  const Graph c4 = cycle(4);
  for (Hops r = 0; r <= 2; ++r) {
    std::size_t expected = 0;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v) expected += c4.distance(u, v) >= r;
    EXPECT_EQ(build_pair_graph(c4, MovementRule::Lazy, r).vertex_count(), expected);
  }
  EXPECT_EQ(build_pair_graph(c4, MovementRule::Lazy, 1).vertex_count(), 12u);
  EXPECT_EQ(build_pair_graph(c4, MovementRule::Lazy, 2).vertex_count(), 4u);
}

TEST(PairGraph, ThresholdZeroKeepsEveryPair) {
  for (const auto& g : {path(5), cycle(6), families::named_graph("fig2_g2")})
    for (MovementRule rule : kAllRules)
      EXPECT_EQ(build_pair_graph(g, rule, 0).vertex_count(), g.order() * g.order());
}

TEST(PairGraph, SingleEdgeActive) {
  const Graph k2 = path(2);
  const PairGraph pg = build_pair_graph(k2, MovementRule::Active, 1);
  EXPECT_EQ(pg.vertex_count(), 2u);
  EXPECT_EQ(pg.edge_count(), 1u);
  EXPECT_TRUE(pg.adjacent({0, 1}, {1, 0}));
}

TEST(PairGraph, ThresholdOutOfRange) {
  EXPECT_THROW(build_pair_graph(path(4), MovementRule::Lazy, 3), ThresholdTooLarge);
  EXPECT_NO_THROW(build_pair_graph(path(4), MovementRule::Lazy, 2));
  EXPECT_THROW(build_pair_graph(path(4), MovementRule::Lazy, -1), ParameterOutOfRange);
}

TEST(PairGraph, EdgeSemanticsPerRule) {
  const Graph c5 = cycle(5);
  for (MovementRule rule : kAllRules) {
    const PairGraph pg = build_pair_graph(c5, rule, 0);
    for (PairGraph::Index i = 0; i < pg.index_bound(); ++i) {
      const VertexPair a = pg.pair_at(i);
      for (PairGraph::Index j : pg.neighbors(i)) {
        const VertexPair b = pg.pair_at(j);
        const bool fm = c5.adjacent(a.first, b.first), sm = c5.adjacent(a.second, b.second);
        const bool fs = a.first == b.first, ss = a.second == b.second;
        ASSERT_TRUE(fm || fs);
        ASSERT_TRUE(sm || ss);
        ASSERT_FALSE(fs && ss);
        if (rule == MovementRule::Active) ASSERT_TRUE(fm && sm);
        if (rule == MovementRule::Lazy) ASSERT_TRUE(fm != sm);
      }
    }
  }
}

// Invariants over every connected graph up to order 7 would be ~1.9M graphs;
// order <= 6 keeps this fast and still exhaustive per order.
class PairGraphInvariants : public ::testing::Test {
 protected:
  static const std::vector<Graph>& corpus() {
    static const std::vector<Graph> c = testing::all_connected_up_to(6);
    return c;
  }
};

TEST_F(PairGraphInvariants, StrongIsDirectUnionCartesian) {
  for (const Graph& g : corpus()) {
    for (Hops r = 0; r <= radius(g); ++r) {
      const PairGraph s = build_pair_graph(g, MovementRule::Traditional, r);
      const PairGraph d = build_pair_graph(g, MovementRule::Active, r);
      const PairGraph c = build_pair_graph(g, MovementRule::Lazy, r);
      ASSERT_EQ(s.edge_count(), d.edge_count() + c.edge_count());
      for (PairGraph::Index i = 0; i < s.index_bound(); ++i) {
        if (!s.contains_index(i)) continue;
        std::vector<PairGraph::Index> merged;
        std::merge(d.neighbors(i).begin(), d.neighbors(i).end(), c.neighbors(i).begin(), c.neighbors(i).end(),
                   std::back_inserter(merged));
        ASSERT_TRUE(std::equal(merged.begin(), merged.end(), s.neighbors(i).begin(), s.neighbors(i).end()));
      }
    }
  }
}

TEST_F(PairGraphInvariants, VertexSetAndSwapSymmetry) {
  for (const Graph& g : corpus()) {
    for (MovementRule rule : kAllRules) {
      const Hops r = radius(g);
      const PairGraph pg = build_pair_graph(g, rule, r);
      for (PairGraph::Index i = 0; i < pg.index_bound(); ++i) {
        const VertexPair p = pg.pair_at(i);
        ASSERT_EQ(pg.contains(p), g.distance(p.first, p.second) >= r);
        if (!pg.contains(p)) continue;
        ASSERT_TRUE(std::find(pg.neighbors(i).begin(), pg.neighbors(i).end(), i) == pg.neighbors(i).end());
        for (PairGraph::Index j : pg.neighbors(i)) {
          const VertexPair q = pg.pair_at(j);
          ASSERT_TRUE(pg.adjacent({p.second, p.first}, {q.second, q.first}));
        }
      }
    }
  }
}

TEST_F(PairGraphInvariants, QualifyingComponentsAreMonotone) {
  for (const Graph& g : corpus()) {
    for (MovementRule rule : kAllRules) {
      for (Hops r = 1; r <= radius(g); ++r) {
        const auto high = components_with_double_surjectivity(build_pair_graph(g, rule, r));
        const auto low = components_with_double_surjectivity(build_pair_graph(g, rule, r - 1));
        for (const auto& comp : high) {
          const bool contained = std::any_of(low.begin(), low.end(), [&](const PairComponent& big) {
            return std::includes(big.begin(), big.end(), comp.begin(), comp.end());
          });
          ASSERT_TRUE(contained) << io::emit_graph6(g);
        }
      }
    }
  }
}

TEST(Components, Examples) {
  const auto k2 = components_with_double_surjectivity(build_pair_graph(path(2), MovementRule::Active, 1));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (PairComponent{{0, 1}, {1, 0}}));

  EXPECT_TRUE(components_with_double_surjectivity(build_pair_graph(path(4), MovementRule::Lazy, 1)).empty());

  const auto c4 = components_with_double_surjectivity(build_pair_graph(cycle(4), MovementRule::Active, 2));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0], (PairComponent{{0, 2}, {1, 3}, {2, 0}, {3, 1}}));
}

TEST(Components, OrderedBySmallestPair) {
  const Graph g = cycle(6);
  const auto comps = connected_components(build_pair_graph(g, MovementRule::Active, 0));
  ASSERT_GE(comps.size(), 2u);  // bipartite: two parity classes
  for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LT(comps[i - 1].front(), comps[i].front());
  for (const auto& c : comps) EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
}

}  // namespace
}  // namespace spanlab
