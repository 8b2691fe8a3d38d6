#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/error.hpp"
#include "spanlab/graph.hpp"

namespace spanlab {

/// How the two actors may move in one step.
///
/// Traditional: each actor moves along an edge or stays (strong product).
/// Active: both actors move along an edge (direct product).
/// Lazy: exactly one actor moves along an edge, the other stays (Cartesian product).
enum class MovementRule { Traditional, Active, Lazy };

inline constexpr std::array<MovementRule, 3> kAllRules{MovementRule::Traditional, MovementRule::Active,
                                                       MovementRule::Lazy};

/// Name of the span a rule measures: strong, direct or cartesian.
inline std::string_view span_name(MovementRule rule) {
  switch (rule) {
    case MovementRule::Traditional: return "strong";
    case MovementRule::Active: return "direct";
    case MovementRule::Lazy: return "cartesian";
  }
  return "?";
}

inline std::string_view rule_name(MovementRule rule) {
  switch (rule) {
    case MovementRule::Traditional: return "traditional";
    case MovementRule::Active: return "active";
    case MovementRule::Lazy: return "lazy";
  }
  return "?";
}

/// Accepts both the span name and the rule name.
inline std::optional<MovementRule> parse_rule(std::string_view s) {
  for (MovementRule r : kAllRules)
    if (s == span_name(r) || s == rule_name(r)) return r;
  return std::nullopt;
}

/// Whether a pair step with the given per-actor movement is an edge under `rule`.
/// Both-stay is never an edge: product graphs carry no loops.
constexpr bool is_pair_step(MovementRule rule, bool first_moves, bool second_moves) {
  switch (rule) {
    case MovementRule::Traditional: return first_moves || second_moves;
    case MovementRule::Active: return first_moves && second_moves;
    case MovementRule::Lazy: return first_moves != second_moves;
  }
  return false;
}

struct VertexPair {
  Vertex first = 0;   ///< Alice
  Vertex second = 0;  ///< Bob

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Induced subgraph of G*G (strong, direct or Cartesian, per rule) on the
/// ordered pairs (u, v) with d(u, v) >= threshold.
///
/// Pairs are indexed u*n + v. The base graph must outlive the pair graph.
class PairGraph {
 public:
  using Index = std::uint32_t;

  const Graph& base() const noexcept { return *base_; }
  MovementRule rule() const noexcept { return rule_; }
  Hops threshold() const noexcept { return threshold_; }

  Index index_of(VertexPair p) const noexcept { return static_cast<Index>(p.first * base_->order() + p.second); }
  VertexPair pair_at(Index i) const noexcept {
    const auto n = static_cast<Index>(base_->order());
    return {i / n, i % n};
  }
  /// Size of the index space, n^2.
  std::size_t index_bound() const noexcept { return present_.size(); }

  bool contains(VertexPair p) const noexcept { return present_[index_of(p)] != 0; }
  bool contains_index(Index i) const noexcept { return present_[i] != 0; }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Undirected edge count.
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  /// Neighbors of a present pair, ascending by index.
  std::span<const Index> neighbors(Index i) const noexcept {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  bool adjacent(VertexPair a, VertexPair b) const noexcept {
    if (!contains(a) || !contains(b)) return false;
    const auto nb = neighbors(index_of(a));
    return std::binary_search(nb.begin(), nb.end(), index_of(b));
  }

 private:
  friend PairGraph build_pair_graph(const Graph& g, MovementRule rule, Hops r);
  PairGraph() = default;

  const Graph* base_ = nullptr;
  MovementRule rule_ = MovementRule::Traditional;
  Hops threshold_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<std::uint8_t> present_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> targets_;
};

/// Throws ThresholdTooLarge for r > radius(g) and ParameterOutOfRange for r < 0.
inline PairGraph build_pair_graph(const Graph& g, MovementRule rule, Hops r) {
  if (r < 0) throw ParameterOutOfRange("negative threshold " + std::to_string(r));
  if (r > radius(g))
    throw ThresholdTooLarge("threshold " + std::to_string(r) + " exceeds radius " + std::to_string(radius(g)));

  const std::size_t n = g.order();
  const auto& d = g.distances();
  PairGraph pg;
  pg.base_ = &g;
  pg.rule_ = rule;
  pg.threshold_ = r;
  pg.present_.assign(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (d(u, v) >= r) {
        pg.present_[u * n + v] = 1;
        ++pg.vertex_count_;
      }

  // Closed neighborhoods, own vertex first: position 0 means "stays".
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex u = 0; u < n; ++u) {
    closed[u].push_back(u);
    for (Vertex w : g.neighbors(u)) closed[u].push_back(w);
  }

  pg.offsets_.assign(n * n + 1, 0);
  std::vector<PairGraph::Index> scratch;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t i = u * n + v;
      pg.offsets_[i] = pg.targets_.size();
      if (!pg.present_[i]) continue;
      scratch.clear();
      for (std::size_t a = 0; a < closed[u].size(); ++a) {
        for (std::size_t b = 0; b < closed[v].size(); ++b) {
          if (!is_pair_step(rule, a != 0, b != 0)) continue;
          const std::size_t j = closed[u][a] * n + closed[v][b];
          if (pg.present_[j]) scratch.push_back(static_cast<PairGraph::Index>(j));
        }
      }
      std::sort(scratch.begin(), scratch.end());
      pg.targets_.insert(pg.targets_.end(), scratch.begin(), scratch.end());
    }
  }
  pg.offsets_[n * n] = pg.targets_.size();
  return pg;
}

/// Connected component of a pair graph, pairs ascending by index.
using PairComponent = std::vector<VertexPair>;

/// Every connected component of `pg`, ordered by smallest contained pair index.
inline std::vector<PairComponent> connected_components(const PairGraph& pg) {
  std::vector<PairComponent> out;
  std::vector<std::uint8_t> seen(pg.index_bound(), 0);
  std::vector<PairGraph::Index> queue;
  for (PairGraph::Index s = 0; s < pg.index_bound(); ++s) {
    if (!pg.contains_index(s) || seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (PairGraph::Index t : pg.neighbors(queue[head]))
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
    std::sort(queue.begin(), queue.end());
    PairComponent comp;
    comp.reserve(queue.size());
    for (PairGraph::Index i : queue) comp.push_back(pg.pair_at(i));
    out.push_back(std::move(comp));
  }
  return out;
}

/// True when both coordinate projections of `comp` cover all n vertices.
inline bool projects_onto_both(std::span<const VertexPair> comp, std::size_t n) {
  std::vector<std::uint8_t> first(n, 0), second(n, 0);
  std::size_t nf = 0, ns = 0;
  for (const VertexPair& p : comp) {
    if (!first[p.first]++) ++nf;
    if (!second[p.second]++) ++ns;
  }
  return nf == n && ns == n;
}

/// Components whose first and second projections are both onto V(G).
inline std::vector<PairComponent> components_with_double_surjectivity(const PairGraph& pg) {
  std::vector<PairComponent> out;
  for (auto& comp : connected_components(pg))
    if (projects_onto_both(comp, pg.base().order())) out.push_back(std::move(comp));
  return out;
}

/// Minimum base-graph distance over the pairs of a component.
inline Hops min_pair_distance(const Graph& g, std::span<const VertexPair> comp) {
  Hops m = static_cast<Hops>(g.order());
  for (const VertexPair& p : comp) m = std::min(m, g.distance(p.first, p.second));
  return m;
}

}  // namespace spanlab
