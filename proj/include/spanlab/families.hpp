#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/error.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/span.hpp"

namespace spanlab::families {

enum class Kind { Path, Cycle, Hypercube, CompleteBipartite, Complete, Star, Wheel, Paramecium, PerfectBinaryTree, Named };

/// A member of one of the graph families with closed-form spans, or a
/// hard-coded figure graph.
///
/// Vertex numbering produced by generate():
///   Path n               0-1-...-(n-1)
///   Cycle n              0..n-1 around the cycle
///   Hypercube d          bit strings 0..2^d-1, adjacent when one bit differs
///   CompleteBipartite    side A is 0..r-1, side B is r..r+s-1
///   Complete n           0..n-1
///   Star n               center 0, leaves 1..n-1 (n vertices in total)
///   Wheel n              hub 0, rim cycle 1..n-1 (n vertices in total)
///   Paramecium n         cycle 0..n-1, pendant of cycle vertex i is n+i
///   PerfectBinaryTree h  level order, children of i are 2i+1 and 2i+2
struct FamilySpec {
  Kind kind = Kind::Path;
  int p = 0;
  int q = 0;
  std::string id;

  static FamilySpec path(int n) { return {Kind::Path, n, 0, {}}; }
  static FamilySpec cycle(int n) { return {Kind::Cycle, n, 0, {}}; }
  static FamilySpec hypercube(int d) { return {Kind::Hypercube, d, 0, {}}; }
  static FamilySpec complete_bipartite(int r, int s) { return {Kind::CompleteBipartite, r, s, {}}; }
  static FamilySpec complete(int n) { return {Kind::Complete, n, 0, {}}; }
  static FamilySpec star(int n) { return {Kind::Star, n, 0, {}}; }
  static FamilySpec wheel(int n) { return {Kind::Wheel, n, 0, {}}; }
  static FamilySpec paramecium(int n) { return {Kind::Paramecium, n, 0, {}}; }
  static FamilySpec perfect_binary_tree(int h) { return {Kind::PerfectBinaryTree, h, 0, {}}; }
  static FamilySpec named(std::string id) { return {Kind::Named, 0, 0, std::move(id)}; }

  std::string name() const {
    const auto n = std::to_string(p);
    switch (kind) {
      case Kind::Path: return "P_" + n;
      case Kind::Cycle: return "C_" + n;
      case Kind::Hypercube: return "Q_" + n;
      case Kind::CompleteBipartite: return "K_{" + n + "," + std::to_string(q) + "}";
      case Kind::Complete: return "K_" + n;
      case Kind::Star: return "S_" + n;
      case Kind::Wheel: return "W_" + n;
      case Kind::Paramecium: return "PC_" + n;
      case Kind::PerfectBinaryTree: return "BT_" + n;
      case Kind::Named: return id;
    }
    return "?";
  }
};

namespace detail {

inline void require(bool ok, const FamilySpec& spec, const char* range) {
  if (!ok) throw ParameterOutOfRange(spec.name() + " is outside the family range (" + range + ")");
}

inline void check_range(const FamilySpec& s) {
  switch (s.kind) {
    case Kind::Path: require(s.p >= 2, s, "n >= 2"); break;
    case Kind::Cycle: require(s.p >= 3, s, "n >= 3"); break;
    case Kind::Hypercube: require(s.p >= 2 && s.p <= 16, s, "2 <= n <= 16"); break;
    case Kind::CompleteBipartite: require(s.p >= 2 && s.q >= 2, s, "r, s >= 2"); break;
    case Kind::Complete: require(s.p >= 3, s, "n >= 3"); break;
    case Kind::Star: require(s.p >= 4, s, "n >= 4"); break;
    case Kind::Wheel: require(s.p >= 4, s, "n >= 4"); break;
    case Kind::Paramecium: require(s.p >= 3, s, "n >= 3"); break;
    case Kind::PerfectBinaryTree: require(s.p >= 1 && s.p <= 20, s, "1 <= h <= 20"); break;
    case Kind::Named: break;
  }
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::build(n, e);
}

// Vertices as drawn, 1-based, shifted to 0-based on construction.
inline Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> edges,
                            std::vector<std::string> labels = {}) {
  std::vector<Edge> e;
  for (auto [a, b] : edges) e.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
  return Graph::build(n, e, std::move(labels));
}

}  // namespace detail

/// Ids accepted by named_graph(), in figure order.
inline const std::vector<std::string>& named_ids() {
  static const std::vector<std::string> ids{"fig1",   "fig2_g1", "fig2_g2", "fig6_left", "fig6_right",
                                            "fig7_a", "fig7_b",  "fig7_c",  "fig7_d",    "fig7_e",
                                            "fig7_f", "fig7_g",  "fig7_h"};
  return ids;
}

/// Figure graphs transcribed from the drawings.
///
///   fig1        6-cycle u1..u6 with chords u2u4 and u3u6; u_i is vertex i-1.
///   fig2_g1     a single edge.
///   fig2_g2     path 0-1-2-3 with apex 4 on the triangle 1-2-4 and pendant 5 on the apex.
///   fig6_left   triangles {0,1,4} and {2,3,5} joined by the bridge x=4, y=5.
///   fig6_right  bridge x=5, y=6; x's side is {0,1,3,4,5,7,8}, y's side the triangle {2,6,9}.
///   fig7_a..h   the eight order-5 radius-2 graphs in reading order, nodes as drawn minus one.
inline Graph named_graph(std::string_view id) {
  using detail::from_one_based;
  if (id == "fig1")
    return from_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {2, 4}, {3, 6}},
                          {"u1", "u2", "u3", "u4", "u5", "u6"});
  if (id == "fig2_g1") return from_one_based(2, {{1, 2}});
  if (id == "fig2_g2") return from_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 5}, {5, 6}});
  if (id == "fig6_left") return from_one_based(6, {{5, 2}, {2, 1}, {1, 5}, {5, 6}, {6, 4}, {4, 3}, {3, 6}});
  if (id == "fig6_right")
    return from_one_based(10, {{6, 2}, {2, 5}, {5, 1}, {1, 4}, {4, 8}, {8, 5}, {5, 9}, {9, 6}, {6, 7}, {7, 10},
                               {10, 3}, {3, 7}});
  if (id == "fig7_a") return from_one_based(5, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 5}});
  if (id == "fig7_b") return from_one_based(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {1, 5}});
  if (id == "fig7_c") return from_one_based(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {1, 5}, {4, 5}});
  if (id == "fig7_d") return from_one_based(5, {{1, 2}, {3, 1}, {3, 4}, {1, 5}, {4, 5}});
  if (id == "fig7_e") return from_one_based(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {1, 5}, {2, 5}});
  if (id == "fig7_f") return from_one_based(5, {{1, 2}, {3, 1}, {3, 4}, {1, 5}});
  if (id == "fig7_g") return from_one_based(5, {{1, 5}, {5, 4}, {4, 3}, {3, 1}, {1, 2}, {2, 4}});
  if (id == "fig7_h") return from_one_based(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {1, 5}, {2, 5}, {4, 5}});
  throw UnknownId("unknown named graph '" + std::string(id) + "'");
}

/// The bridge marked xy on fig6_left and fig6_right.
inline Edge figure_bridge(std::string_view id) {
  if (id == "fig6_left") return {4, 5};
  if (id == "fig6_right") return {5, 6};
  throw UnknownId("no bridge is marked on '" + std::string(id) + "'");
}

/// Values printed next to a figure graph. Fields the figure does not state are empty.
struct PrintedValues {
  std::optional<Hops> radius;
  std::optional<Hops> cut_bound;
  std::optional<Hops> strong;
  std::optional<Hops> direct;
  std::optional<Hops> cartesian;
};

inline PrintedValues printed_values(std::string_view id) {
  named_graph(id);  // validates the id
  PrintedValues v;
  if (id == "fig2_g1") v.direct = 1, v.cartesian = 0;
  if (id == "fig2_g2") v.direct = 1, v.cartesian = 2;
  if (id == "fig6_left") v.radius = 2, v.cut_bound = 1;
  if (id == "fig6_right") v.radius = 3, v.cut_bound = 4;
  if (id.starts_with("fig7_")) {
    static constexpr std::array<Hops, 8> direct{1, 1, 2, 2, 1, 1, 2, 2};
    v.radius = 2;
    v.direct = direct[static_cast<std::size_t>(id.back() - 'a')];
    v.cartesian = 1;
  }
  return v;
}

inline Graph generate(const FamilySpec& spec) {
  detail::check_range(spec);
  const auto p = static_cast<std::size_t>(spec.p);
  std::vector<Edge> e;
  switch (spec.kind) {
    case Kind::Path:
      for (Vertex i = 0; i + 1 < p; ++i) e.push_back({i, i + 1});
      return Graph::build(p, e);
    case Kind::Cycle: return detail::cycle_graph(p);
    case Kind::Hypercube: {
      const std::size_t n = std::size_t{1} << p;
      for (Vertex u = 0; u < n; ++u)
        for (std::size_t bit = 0; bit < p; ++bit)
          if (const Vertex w = u ^ (Vertex{1} << bit); u < w) e.push_back({u, w});
      return Graph::build(n, e);
    }
    case Kind::CompleteBipartite: {
      const auto q = static_cast<std::size_t>(spec.q);
      for (Vertex a = 0; a < p; ++a)
        for (Vertex b = 0; b < q; ++b) e.push_back({a, static_cast<Vertex>(p + b)});
      return Graph::build(p + q, e);
    }
    case Kind::Complete:
      for (Vertex u = 0; u < p; ++u)
        for (Vertex v = u + 1; v < p; ++v) e.push_back({u, v});
      return Graph::build(p, e);
    case Kind::Star:
      for (Vertex v = 1; v < p; ++v) e.push_back({0, v});
      return Graph::build(p, e);
    case Kind::Wheel:
      for (Vertex v = 1; v < p; ++v) {
        e.push_back({0, v});
        e.push_back({v, static_cast<Vertex>(v + 1 < p ? v + 1 : 1)});
      }
      return Graph::build(p, e);
    case Kind::Paramecium:
      for (Vertex i = 0; i < p; ++i) {
        e.push_back({i, static_cast<Vertex>((i + 1) % p)});
        e.push_back({i, static_cast<Vertex>(p + i)});
      }
      return Graph::build(2 * p, e);
    case Kind::PerfectBinaryTree: {
      const std::size_t n = (std::size_t{1} << (p + 1)) - 1;
      for (Vertex v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v});
      return Graph::build(n, e);
    }
    case Kind::Named: return named_graph(spec.id);
  }
  throw ParameterOutOfRange("unhandled family");
}

/// Closed-form (strong, direct, cartesian) spans of a family member.
/// Named figure graphs have no closed form; see printed_values().
inline SpanTriple expected_spans(const FamilySpec& spec) {
  detail::check_range(spec);
  const Hops n = spec.p;
  switch (spec.kind) {
    case Kind::Path: return {1, 1, 0};
    case Kind::Cycle: return {n / 2, n / 2, n % 2 == 1 ? n / 2 : n / 2 - 1};
    case Kind::Hypercube: return {n, n, n - 1};
    case Kind::CompleteBipartite: return {2, 2, 1};
    case Kind::Complete:
    case Kind::Star:
    case Kind::Wheel: return {1, 1, 1};
    case Kind::Paramecium: return {(n + 1) / 2, n / 2, (n + 1) / 2};
    case Kind::PerfectBinaryTree: return {n - 1, n - 1, n - 1};
    case Kind::Named: break;
  }
  throw ParameterOutOfRange(spec.name() + " has no closed-form span values");
}

/// Closed-form radius of a family member.
inline Hops expected_radius(const FamilySpec& spec) {
  detail::check_range(spec);
  const Hops n = spec.p;
  switch (spec.kind) {
    case Kind::Path:
    case Kind::Cycle: return n / 2;
    case Kind::Hypercube: return n;
    case Kind::CompleteBipartite: return 2;
    case Kind::Complete:
    case Kind::Star:
    case Kind::Wheel: return 1;
    case Kind::Paramecium: return n / 2 + 1;
    case Kind::PerfectBinaryTree: return n;
    case Kind::Named: break;
  }
  throw ParameterOutOfRange(spec.name() + " has no closed-form radius");
}

/// Parameter caps for the family sweep.
struct SweepLimits {
  int max_path = 10;
  int max_cycle = 10;
  int max_cube = 4;
  int max_bipartite = 4;
  int max_complete = 8;
  int max_paramecium = 9;
  int max_tree = 4;
};

/// Every family member within the caps, smallest parameters first.
inline std::vector<FamilySpec> sweep(const SweepLimits& lim) {
  std::vector<FamilySpec> out;
  for (int n = 2; n <= lim.max_path; ++n) out.push_back(FamilySpec::path(n));
  for (int n = 3; n <= lim.max_cycle; ++n) out.push_back(FamilySpec::cycle(n));
  for (int n = 2; n <= lim.max_cube; ++n) out.push_back(FamilySpec::hypercube(n));
  for (int r = 2; r <= lim.max_bipartite; ++r)
    for (int s = 2; s <= lim.max_bipartite; ++s) out.push_back(FamilySpec::complete_bipartite(r, s));
  for (int n = 3; n <= lim.max_complete; ++n) out.push_back(FamilySpec::complete(n));
  for (int n = 4; n <= lim.max_complete; ++n) out.push_back(FamilySpec::star(n));
  for (int n = 4; n <= lim.max_complete; ++n) out.push_back(FamilySpec::wheel(n));
  for (int n = 3; n <= lim.max_paramecium; ++n) out.push_back(FamilySpec::paramecium(n));
  for (int h = 1; h <= lim.max_tree; ++h) out.push_back(FamilySpec::perfect_binary_tree(h));
  return out;
}

}  // namespace spanlab::families
