#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanlab/error.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/product.hpp"

namespace spanlab {

/// Span of a graph under one movement rule, with the pair-graph component
/// that certifies it.
struct SpanReport {
  MovementRule rule = MovementRule::Traditional;
  Hops value = 0;
  PairComponent witness_component;
  /// Minimum distance over the witness pairs; always equals `value`.
  Hops epsilon = 0;
};

/// Largest threshold r in [0, radius] whose pair graph has a component
/// projecting onto V(G) in both coordinates.
///
/// Descends from the radius and stops at the first success, so the witness is
/// the qualifying component with the smallest pair index at the maximal r.
inline SpanReport compute_span(const Graph& g, MovementRule rule) {
  for (Hops r = radius(g); r >= 0; --r) {
    const PairGraph pg = build_pair_graph(g, rule, r);
    auto comps = components_with_double_surjectivity(pg);
    if (comps.empty()) continue;
    SpanReport rep;
    rep.rule = rule;
    rep.value = r;
    rep.epsilon = min_pair_distance(g, comps.front());
    rep.witness_component = std::move(comps.front());
    return rep;
  }
  // Unreachable on connected graphs: the diagonal walk qualifies at r = 0.
  throw std::logic_error("no qualifying pair component at threshold 0");
}

struct SpanTriple {
  Hops strong = 0;
  Hops direct = 0;
  Hops cartesian = 0;

  Hops of(MovementRule rule) const noexcept {
    switch (rule) {
      case MovementRule::Traditional: return strong;
      case MovementRule::Active: return direct;
      case MovementRule::Lazy: return cartesian;
    }
    return -1;
  }

  friend bool operator==(const SpanTriple&, const SpanTriple&) = default;
};

inline SpanTriple compute_spans(const Graph& g) {
  return {compute_span(g, MovementRule::Traditional).value, compute_span(g, MovementRule::Active).value,
          compute_span(g, MovementRule::Lazy).value};
}

/// Alice's walk `f` and Bob's walk `g`, step by step, under a movement rule.
struct TrackPair {
  std::vector<Vertex> f;
  std::vector<Vertex> g;
  MovementRule rule = MovementRule::Traditional;

  std::size_t length() const noexcept { return f.size(); }
};

struct TrackValidation {
  bool conforms = false;
  bool surjective_f = false;
  bool surjective_g = false;
  Hops min_distance = 0;

  bool valid() const noexcept { return conforms && surjective_f && surjective_g; }
};

namespace detail {

inline void check_track_shape(const Graph& g, const TrackPair& t) {
  if (t.f.empty() || t.f.size() != t.g.size())
    throw InvalidTracks("tracks must be non-empty and of equal length (got " + std::to_string(t.f.size()) +
                        " and " + std::to_string(t.g.size()) + ")");
  for (std::size_t i = 0; i < t.f.size(); ++i)
    if (t.f[i] >= g.order() || t.g[i] >= g.order())
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "track step " + std::to_string(i + 1) + " leaves the vertex range");
}

// Per-step conformance only, surjectivity is checked separately.
inline bool steps_conform(const Graph& g, const TrackPair& t) {
  for (std::size_t i = 0; i + 1 < t.f.size(); ++i) {
    const bool f_moves = g.adjacent(t.f[i], t.f[i + 1]);
    const bool g_moves = g.adjacent(t.g[i], t.g[i + 1]);
    const bool f_stays = t.f[i] == t.f[i + 1];
    const bool g_stays = t.g[i] == t.g[i + 1];
    bool ok = false;
    switch (t.rule) {
      case MovementRule::Traditional: ok = (f_moves || f_stays) && (g_moves || g_stays); break;
      case MovementRule::Active: ok = f_moves && g_moves; break;
      case MovementRule::Lazy: ok = (f_moves && g_stays) || (g_moves && f_stays); break;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool covers(const std::vector<Vertex>& walk, std::size_t n) {
  std::vector<std::uint8_t> hit(n, 0);
  std::size_t count = 0;
  for (Vertex v : walk)
    if (!hit[v]++) ++count;
  return count == n;
}

}  // namespace detail

/// Checks `t` against its rule: lazy l-tracks for Traditional, l-tracks for
/// Active, opposite lazy l-tracks for Lazy. A both-stay step never conforms to
/// Lazy. Throws InvalidTracks on empty or unequal sequences and GraphError
/// (VertexOutOfRange) on foreign vertices.
inline TrackValidation validate_tracks(const Graph& g, const TrackPair& t) {
  detail::check_track_shape(g, t);
  TrackValidation out;
  out.conforms = detail::steps_conform(g, t);
  out.surjective_f = detail::covers(t.f, g.order());
  out.surjective_g = detail::covers(t.g, g.order());
  out.min_distance = g.distance(t.f[0], t.g[0]);
  for (std::size_t i = 1; i < t.f.size(); ++i) out.min_distance = std::min(out.min_distance, g.distance(t.f[i], t.g[i]));
  return out;
}

/// Closed depth-first walk over a spanning tree of the witness component,
/// rooted at its smallest pair: every tree edge is walked down and back up, so
/// the walk has 2|H| - 1 positions and returns to the root.
inline TrackPair extract_witness_tracks(const Graph& g, const SpanReport& report) {
  if (report.witness_component.empty()) throw InvalidTracks("empty witness component");
  const PairComponent& comp = report.witness_component;
  const std::size_t n = g.order();

  // Local ids follow the component's ascending pair order.
  std::vector<std::int64_t> local(n * n, -1);
  for (std::size_t k = 0; k < comp.size(); ++k) local[comp[k].first * n + comp[k].second] = static_cast<std::int64_t>(k);

  auto neighbors_in_comp = [&](const VertexPair& p) {
    std::vector<std::size_t> out;
    auto consider = [&](Vertex a, Vertex b) {
      if (!is_pair_step(report.rule, a != p.first, b != p.second)) return;
      if (const auto k = local[a * n + b]; k >= 0) out.push_back(static_cast<std::size_t>(k));
    };
    consider(p.first, p.second);
    for (Vertex b : g.neighbors(p.second)) consider(p.first, b);
    for (Vertex a : g.neighbors(p.first)) {
      consider(a, p.second);
      for (Vertex b : g.neighbors(p.second)) consider(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  TrackPair t;
  t.rule = report.rule;
  std::vector<std::uint8_t> visited(comp.size(), 0);
  struct Frame {
    std::size_t node;
    std::vector<std::size_t> next;
    std::size_t pos = 0;
  };
  std::vector<Frame> stack;
  auto emit = [&](std::size_t k) {
    t.f.push_back(comp[k].first);
    t.g.push_back(comp[k].second);
  };
  visited[0] = 1;
  emit(0);
  stack.push_back({0, neighbors_in_comp(comp[0])});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.pos < top.next.size()) {
      const std::size_t k = top.next[top.pos++];
      if (visited[k]) continue;
      visited[k] = 1;
      emit(k);
      stack.push_back({k, neighbors_in_comp(comp[k])});
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) emit(stack.back().node);
  }
  return t;
}

/// Who moved at each step of a Lazy track pair: 1 for Alice, 2 for Bob.
struct MoveAttribution {
  std::vector<std::uint8_t> x;
  /// Number of mixed (1,2)/(2,1) pairs among (x[2k-1], x[2k]).
  std::size_t mixed_pairs = 0;
};

inline MoveAttribution attribute_moves(const Graph& g, const TrackPair& t) {
  MoveAttribution m;
  for (std::size_t i = 0; i + 1 < t.f.size(); ++i) m.x.push_back(g.adjacent(t.f[i], t.f[i + 1]) ? 1 : 2);
  for (std::size_t k = 0; k + 1 < m.x.size(); k += 2)
    if (m.x[k] != m.x[k + 1]) ++m.mixed_pairs;
  return m;
}

/// Active tracks of length l to Lazy tracks of length 2l - 1 by letting Alice
/// move first and Bob catch up: f'(i) = f(ceil((i+1)/2)), g'(i) = g(ceil(i/2)).
/// The minimum distance drops by at most one.
inline TrackPair direct_to_lazy(const Graph& g, const TrackPair& t) {
  detail::check_track_shape(g, t);
  if (t.rule != MovementRule::Active || !detail::steps_conform(g, t))
    throw NotActiveConformant("input tracks do not follow the active movement rule");
  TrackPair out;
  out.rule = MovementRule::Lazy;
  const std::size_t len = 2 * t.length() - 1;
  for (std::size_t j = 0; j < len; ++j) {
    out.f.push_back(t.f[(j + 1) / 2]);
    out.g.push_back(t.g[j / 2]);
  }
  return out;
}

namespace detail {

// Neighbor of `around` farthest from `other`, smallest id on ties.
inline Vertex farthest_neighbor(const Graph& g, Vertex around, Vertex other) {
  const auto nbrs = g.neighbors(around);
  Vertex best = nbrs.front();
  for (Vertex w : nbrs)
    if (g.distance(w, other) > g.distance(best, other)) best = w;
  return best;
}

}  // namespace detail

/// Lazy tracks of length l to Active tracks of length l - a, where a counts
/// the mixed pairs of the move attribution.
///
/// Consecutive moves are taken two at a time. A mixed pair (one move each)
/// becomes a single simultaneous step. A pair where the same actor moves
/// twice becomes two steps during which the idle actor steps to a neighbor
/// and back. An unpaired final move becomes one step with the idle actor
/// ending on a neighbor. Detour neighbors are chosen farthest from the other
/// actor, smallest id on ties. The minimum distance drops by at most one.
inline TrackPair lazy_to_direct(const Graph& g, const TrackPair& t) {
  detail::check_track_shape(g, t);
  if (t.rule != MovementRule::Lazy || !detail::steps_conform(g, t))
    throw NotLazyConformant("input tracks do not follow the lazy movement rule");

  const MoveAttribution m = attribute_moves(g, t);
  const std::size_t l = t.length();
  TrackPair out;
  out.rule = MovementRule::Active;
  out.f.assign(l - m.mixed_pairs, 0);
  out.g.assign(l - m.mixed_pairs, 0);

  // 1-based accessors keep the index bookkeeping (i, b) readable.
  auto f = [&](std::size_t k) { return t.f[k - 1]; };
  auto gg = [&](std::size_t k) { return t.g[k - 1]; };
  auto set = [&](std::size_t k, Vertex a, Vertex b) {
    out.f[k - 1] = a;
    out.g[k - 1] = b;
  };

  std::size_t i = 1, b = 0;
  set(1, f(1), gg(1));
  const std::size_t pairs = (l - 1) / 2;
  for (std::size_t k = 1; k <= pairs; ++k) {
    const auto first = m.x[2 * k - 2], second = m.x[2 * k - 1];
    if (first == 1 && second == 1) {
      i += 2;
      const Vertex x = detail::farthest_neighbor(g, gg(i + b), f(i - 1 + b));
      set(i - 1, f(i - 1 + b), x);
      set(i, f(i + b), gg(i + b));
    } else if (first == 2 && second == 2) {
      i += 2;
      const Vertex x = detail::farthest_neighbor(g, f(i + b), gg(i - 1 + b));
      set(i - 1, x, gg(i - 1 + b));
      set(i, f(i + b), gg(i + b));
    } else {
      ++b;
      ++i;
      set(i, f(i + b), gg(i + b));
    }
  }
  if ((l - 1) % 2 == 1) {
    ++i;
    if (m.x[l - 2] == 1)
      set(i, f(i + b), detail::farthest_neighbor(g, gg(i + b), f(i + b)));
    else
      set(i, detail::farthest_neighbor(g, f(i + b), gg(i + b)), gg(i + b));
  }
  return out;
}

}  // namespace spanlab
