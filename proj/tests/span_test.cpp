#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

namespace spanlab {
namespace {

using families::FamilySpec;
using testing::cycle;
using testing::path;

constexpr auto kStrong = MovementRule::Traditional;
constexpr auto kDirect = MovementRule::Active;
constexpr auto kCart = MovementRule::Lazy;

Graph pc(int n) { return families::generate(FamilySpec::paramecium(n)); }

TEST(ComputeSpan, Paths) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(compute_span(path(n), kCart).value, 0) << n;
    EXPECT_EQ(compute_span(path(n), kDirect).value, 1) << n;
    EXPECT_EQ(compute_span(path(n), kStrong).value, 1) << n;
  }
}

TEST(ComputeSpan, FamilyExamples) {
  EXPECT_EQ(compute_span(cycle(7), kCart).value, 3);
  EXPECT_EQ(compute_span(cycle(8), kCart).value, 3);
  EXPECT_EQ(compute_span(cycle(8), kDirect).value, 4);
  const Graph q3 = families::generate(FamilySpec::hypercube(3));
  EXPECT_EQ(compute_span(q3, kStrong).value, 3);
  EXPECT_EQ(compute_span(q3, kCart).value, 2);
  const Graph k23 = families::generate(FamilySpec::complete_bipartite(2, 3));
  EXPECT_EQ(compute_span(k23, kStrong).value, 2);
  EXPECT_EQ(compute_span(k23, kCart).value, 1);
}

TEST(ComputeSpan, TightnessGraph) {
  const Graph g2 = families::named_graph("fig2_g2");
  EXPECT_EQ(compute_span(g2, kDirect).value, 1);
  EXPECT_EQ(compute_span(g2, kCart).value, 2);
  const Graph g1 = families::named_graph("fig2_g1");
  EXPECT_EQ(compute_span(g1, kDirect).value, 1);
  EXPECT_EQ(compute_span(g1, kCart).value, 0);
}

TEST(ComputeSpan, SingleVertex) {
  const Graph k1 = Graph::build(1, std::vector<Edge>{});
  for (MovementRule rule : kAllRules) {
    const SpanReport rep = compute_span(k1, rule);
    EXPECT_EQ(rep.value, 0);
    EXPECT_EQ(rep.witness_component, (PairComponent{{0, 0}}));
    const TrackPair t = extract_witness_tracks(k1, rep);
    EXPECT_EQ(t.length(), 1u);
    EXPECT_TRUE(validate_tracks(k1, t).valid());
  }
}

TEST(ComputeSpan, ReportFields) {
  const Graph g = pc(6);
  for (MovementRule rule : kAllRules) {
    const SpanReport rep = compute_span(g, rule);
    EXPECT_EQ(rep.rule, rule);
    EXPECT_EQ(rep.epsilon, rep.value);
    EXPECT_TRUE(std::is_sorted(rep.witness_component.begin(), rep.witness_component.end()));
    EXPECT_TRUE(projects_onto_both(rep.witness_component, g.order()));
  }
}

TEST(Witness, SingleEdgeSwap) {
  const Graph k2 = path(2);
  const TrackPair t = extract_witness_tracks(k2, compute_span(k2, kDirect));
  EXPECT_EQ(t.f, (std::vector<Vertex>{0, 1, 0}));
  EXPECT_EQ(t.g, (std::vector<Vertex>{1, 0, 1}));
  EXPECT_EQ(validate_tracks(k2, t).min_distance, 1);
}

TEST(Witness, SquareStaysAntipodal) {
  const Graph c4 = cycle(4);
  const TrackPair t = extract_witness_tracks(c4, compute_span(c4, kDirect));
  for (std::size_t i = 0; i < t.length(); ++i) EXPECT_EQ(c4.distance(t.f[i], t.g[i]), 2);
  EXPECT_TRUE(validate_tracks(c4, t).valid());
}

TEST(Witness, ClosedWalkLength) {
  for (const Graph& g : {pc(5), cycle(7), families::named_graph("fig1")})
    for (MovementRule rule : kAllRules) {
      const SpanReport rep = compute_span(g, rule);
      const TrackPair t = extract_witness_tracks(g, rep);
      EXPECT_EQ(t.length(), 2 * rep.witness_component.size() - 1);
      EXPECT_EQ(t.f.front(), t.f.back());
      EXPECT_EQ(t.g.front(), t.g.back());
      EXPECT_EQ((VertexPair{t.f.front(), t.g.front()}), rep.witness_component.front());
    }
}

TEST(Witness, ParameciumLazyParksOnLeaf) {
  const Graph g = pc(5);
  const SpanReport rep = compute_span(g, kCart);
  ASSERT_EQ(rep.value, 3);
  const TrackPair t = extract_witness_tracks(g, rep);
  const TrackValidation v = validate_tracks(g, t);
  EXPECT_TRUE(v.valid());
  EXPECT_EQ(v.min_distance, 3);
  // Leaves are 5..9. Some step must have Alice resting on one while Bob moves.
  bool parked = false;
  for (std::size_t i = 0; i + 1 < t.length(); ++i)
    parked |= t.f[i] >= 5 && t.f[i] == t.f[i + 1] && t.g[i] != t.g[i + 1];
  EXPECT_TRUE(parked);
}

TrackPair fig1_active_walks() {
  // fig1 labels u1..u6 are vertices 0..5.
  return {{3, 4, 5, 0, 1, 2}, {0, 1, 3, 2, 5, 4}, kDirect};
}

TEST(Validate, Fig1ActiveWalks) {
  const Graph g = families::named_graph("fig1");
  const TrackValidation v = validate_tracks(g, fig1_active_walks());
  EXPECT_TRUE(v.conforms);
  EXPECT_TRUE(v.surjective_f);
  EXPECT_TRUE(v.surjective_g);
  EXPECT_EQ(v.min_distance, 2);
  // Read as lazy tracks they do not conform: both actors move at every step.
  TrackPair lazy = fig1_active_walks();
  lazy.rule = kCart;
  EXPECT_FALSE(validate_tracks(g, lazy).conforms);
}

TEST(Validate, DiagonalWalkIsNotLazy) {
  const Graph g = path(3);
  const TrackPair t{{0, 1, 2, 1, 0}, {0, 1, 2, 1, 0}, kCart};
  const TrackValidation v = validate_tracks(g, t);
  EXPECT_FALSE(v.conforms);
  EXPECT_EQ(v.min_distance, 0);
  EXPECT_TRUE(v.surjective_f);
}

TEST(Validate, BothStayDistinguishesRules) {
  const Graph g = path(3);
  const TrackPair base{{0, 0, 1, 2}, {2, 2, 2, 1}, kStrong};
  EXPECT_TRUE(validate_tracks(g, base).conforms);
  for (MovementRule r : {kDirect, kCart}) {
    TrackPair t = base;
    t.rule = r;
    EXPECT_FALSE(validate_tracks(g, t).conforms);
  }
}

TEST(Validate, Errors) {
  const Graph g = path(3);
  EXPECT_THROW(validate_tracks(g, TrackPair{{}, {}, kStrong}), InvalidTracks);
  EXPECT_THROW(validate_tracks(g, TrackPair{{0, 1}, {2}, kStrong}), InvalidTracks);
  try {
    validate_tracks(g, TrackPair{{0, 3}, {2, 1}, kStrong});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::VertexOutOfRange);
  }
}

TEST(DirectToLazy, Formula) {
  const Graph g = families::named_graph("fig1");
  const TrackPair in = fig1_active_walks();
  const TrackPair out = direct_to_lazy(g, in);
  ASSERT_EQ(out.length(), 2 * in.length() - 1);
  EXPECT_EQ(out.rule, kCart);
  // 1-based: f'(i) = f(ceil((i+1)/2)), g'(i) = g(ceil(i/2)).
  for (std::size_t i = 1; i <= out.length(); ++i) {
    EXPECT_EQ(out.f[i - 1], in.f[(i + 2) / 2 - 1]);
    EXPECT_EQ(out.g[i - 1], in.g[(i + 1) / 2 - 1]);
  }
  const TrackValidation v = validate_tracks(g, out);
  EXPECT_TRUE(v.valid());
  EXPECT_GE(v.min_distance, 1);
}

TEST(DirectToLazy, Degenerate) {
  const Graph g = path(3);
  const TrackPair one{{0}, {2}, kDirect};
  const TrackPair out = direct_to_lazy(g, one);
  EXPECT_EQ(out.f, one.f);
  EXPECT_EQ(out.g, one.g);

  const Graph k2 = path(2);
  const TrackPair swapped = direct_to_lazy(k2, {{0, 1, 0}, {1, 0, 1}, kDirect});
  EXPECT_TRUE(validate_tracks(k2, swapped).valid());
  EXPECT_GE(validate_tracks(k2, swapped).min_distance, 0);

  const Graph c4 = cycle(4);
  const TrackPair anti = extract_witness_tracks(c4, compute_span(c4, kDirect));
  const TrackValidation v = validate_tracks(c4, direct_to_lazy(c4, anti));
  EXPECT_TRUE(v.valid());
  EXPECT_GE(v.min_distance, 1);
}

TEST(DirectToLazy, RejectsNonActive) {
  const Graph g = path(3);
  EXPECT_THROW(direct_to_lazy(g, {{0, 1}, {2, 2}, kDirect}), NotActiveConformant);
  EXPECT_THROW(direct_to_lazy(g, {{0, 1}, {2, 1}, kStrong}), NotActiveConformant);
}

TEST(LazyToDirect, PureInterleaving) {
  const Graph c6 = cycle(6);
  const TrackPair in{{0, 1, 1, 2, 2, 3, 3}, {3, 3, 4, 4, 5, 5, 0}, kCart};
  const MoveAttribution m = attribute_moves(c6, in);
  EXPECT_EQ(m.x, (std::vector<std::uint8_t>{1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(m.mixed_pairs, 3u);
  const TrackPair out = lazy_to_direct(c6, in);
  EXPECT_EQ(out.f, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(out.g, (std::vector<Vertex>{3, 4, 5, 0}));
  EXPECT_EQ(validate_tracks(c6, out).min_distance, 3);
  EXPECT_GE(validate_tracks(c6, out).min_distance, validate_tracks(c6, in).min_distance);
}

TEST(LazyToDirect, DetoursAndTrailingStep) {
  // Alice walks twice, then Bob once (unpaired tail).
  const Graph c6 = cycle(6);
  const TrackPair in{{0, 1, 2, 2}, {4, 4, 4, 5}, kCart};
  const TrackPair out = lazy_to_direct(c6, in);
  EXPECT_EQ(out.length(), in.length());
  const TrackValidation v = validate_tracks(c6, out);
  EXPECT_TRUE(v.conforms);
  EXPECT_EQ(out.f[0], 0u);
  EXPECT_EQ(out.f[2], 2u);
  EXPECT_EQ(out.g[2], 4u);
  EXPECT_EQ(out.g[3], 5u);
  EXPECT_GE(v.min_distance, validate_tracks(c6, in).min_distance - 1);
}

TEST(LazyToDirect, ParameciumWitness) {
  const Graph g = pc(5);
  const TrackPair lazy = extract_witness_tracks(g, compute_span(g, kCart));
  const MoveAttribution m = attribute_moves(g, lazy);
  const TrackPair out = lazy_to_direct(g, lazy);
  EXPECT_EQ(out.length(), lazy.length() - m.mixed_pairs);
  const TrackValidation v = validate_tracks(g, out);
  EXPECT_TRUE(v.valid());
  EXPECT_GE(v.min_distance, 2);
  EXPECT_LE(v.min_distance, compute_span(g, kDirect).value);
}

TEST(LazyToDirect, TightnessGraph) {
  const Graph g2 = families::named_graph("fig2_g2");
  const TrackPair lazy = extract_witness_tracks(g2, compute_span(g2, kCart));
  ASSERT_EQ(validate_tracks(g2, lazy).min_distance, 2);
  const TrackValidation v = validate_tracks(g2, lazy_to_direct(g2, lazy));
  EXPECT_TRUE(v.valid());
  EXPECT_EQ(v.min_distance, 1);
  EXPECT_EQ(verify::oracle_span(g2, kDirect), 1);
}

TEST(LazyToDirect, RejectsNonLazy) {
  const Graph g = path(3);
  EXPECT_THROW(lazy_to_direct(g, {{0, 1}, {2, 1}, kCart}), NotLazyConformant);
  EXPECT_THROW(lazy_to_direct(g, {{0, 0}, {2, 2}, kCart}), NotLazyConformant);
  EXPECT_THROW(lazy_to_direct(g, {{0, 1}, {2, 2}, kDirect}), NotLazyConformant);
}

// Exhaustive up to order 6 plus 500 seeded random graphs up to order 12.
const std::vector<Graph>& property_corpus() {
  static const std::vector<Graph> corpus = [] {
    auto c = testing::all_connected_up_to(6);
    auto r = verify::random_graphs(500, 2, 12, 0.3, 20240611);
    c.insert(c.end(), r.begin(), r.end());
    return c;
  }();
  return corpus;
}

TEST(SpanProperties, OrderingAndRadius) {
  for (const Graph& g : property_corpus()) {
    const SpanTriple s = compute_spans(g);
    const Hops rad = radius(g);
    ASSERT_GE(s.strong, std::max(s.direct, s.cartesian)) << io::emit_graph6(g);
    ASSERT_LE(std::abs(s.direct - s.cartesian), 1) << io::emit_graph6(g);
    ASSERT_LE(s.strong, rad) << io::emit_graph6(g);
    ASSERT_GE(s.cartesian, 0);
  }
}

TEST(SpanProperties, WitnessRoundTripAndTransformations) {
  for (const Graph& g : property_corpus()) {
    for (MovementRule rule : kAllRules) {
      const SpanReport rep = compute_span(g, rule);
      const TrackPair t = extract_witness_tracks(g, rep);
      const TrackValidation v = validate_tracks(g, t);
      ASSERT_TRUE(v.valid()) << io::emit_graph6(g) << ' ' << span_name(rule);
      ASSERT_EQ(v.min_distance, rep.value) << io::emit_graph6(g) << ' ' << span_name(rule);
      if (rule == kDirect) {
        const TrackValidation lv = validate_tracks(g, direct_to_lazy(g, t));
        ASSERT_TRUE(lv.valid()) << io::emit_graph6(g);
        ASSERT_GE(lv.min_distance, rep.value - 1) << io::emit_graph6(g);
      }
      if (rule == kCart) {
        const TrackValidation dv = validate_tracks(g, lazy_to_direct(g, t));
        ASSERT_TRUE(dv.valid()) << io::emit_graph6(g);
        ASSERT_GE(dv.min_distance, rep.value - 1) << io::emit_graph6(g);
      }
    }
  }
}

TEST(SpanProperties, OracleAgreementUpToFive) {
  for (const Graph& g : testing::all_connected_up_to(5))
    for (MovementRule rule : kAllRules)
      ASSERT_EQ(compute_span(g, rule).value, verify::oracle_span(g, rule)) << io::emit_graph6(g) << ' ' << span_name(rule);
}

}  // namespace
}  // namespace spanlab
