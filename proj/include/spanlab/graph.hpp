#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanlab/error.hpp"

namespace spanlab {

using Vertex = std::uint32_t;

/// Hop count. Signed so that differences and "minus one" bounds stay well defined.
using Hops = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with endpoints ordered u < v.
  Edge normalized() const { return u <= v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense n x n matrix of hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t order() const noexcept { return n_; }
  Hops operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
  Hops& at(Vertex u, Vertex v) noexcept { return d_[u * n_ + v]; }
  std::span<const Hops> row(Vertex u) const noexcept { return {d_.data() + u * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Hops> d_;
};

/// Immutable simple connected undirected graph on vertices 0..n-1.
///
/// All-pairs distances are computed once at construction, every span query
/// needs them. Optional external labels live in a side table and never affect
/// structure.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on an empty vertex set, self-loops,
  /// duplicate edges (in either orientation), out-of-range endpoints, or a
  /// disconnected result.
  static Graph build(std::size_t n, std::span<const Edge> edges,
                     std::vector<std::string> labels = {}) {
    if (n == 0) throw GraphError(GraphError::Kind::EmptyGraph, "graph has no vertices");
    if (!labels.empty() && labels.size() != n)
      throw GraphError(GraphError::Kind::VertexOutOfRange, "label count does not match vertex count");

    Graph g;
    g.n_ = n;
    g.adjacent_.assign(n * n, 0);
    g.neighbors_.resize(n);
    g.labels_ = std::move(labels);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n)
        throw GraphError(GraphError::Kind::VertexOutOfRange,
                         "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " has an endpoint outside 0.." + std::to_string(n - 1));
      if (e.u == e.v)
        throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
      if (g.adjacent_[e.u * n + e.v])
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      g.adjacent_[e.u * n + e.v] = g.adjacent_[e.v * n + e.u] = 1;
      g.neighbors_[e.u].push_back(e.v);
      g.neighbors_[e.v].push_back(e.u);
      g.edges_.push_back(e.normalized());
    }
    for (auto& nbrs : g.neighbors_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(g.edges_.begin(), g.edges_.end());

    g.dist_ = DistanceMatrix(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) g.dist_.at(s, t) = -1;
      g.dist_.at(s, s) = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const Vertex x = queue[head++];
        for (Vertex y : g.neighbors_[x]) {
          if (g.dist_(s, y) < 0) {
            g.dist_.at(s, y) = g.dist_(s, x) + 1;
            queue[tail++] = y;
          }
        }
      }
      if (tail != n)
        throw GraphError(GraphError::Kind::Disconnected,
                         "graph is disconnected (" + std::to_string(tail) + " of " +
                             std::to_string(n) + " vertices reachable from 0)");
    }
    return g;
  }

  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex u) const noexcept { return neighbors_[u]; }
  std::size_t degree(Vertex u) const noexcept { return neighbors_[u].size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return adjacent_[u * n_ + v] != 0; }

  /// Edges with u < v, ascending.
  std::span<const Edge> edges() const noexcept { return edges_; }

  const DistanceMatrix& distances() const noexcept { return dist_; }
  Hops distance(Vertex u, Vertex v) const noexcept { return dist_(u, v); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External name of `u`, or its decimal id when unlabeled.
  std::string label(Vertex u) const { return labels_.empty() ? std::to_string(u) : labels_[u]; }

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adjacent_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  DistanceMatrix dist_;
};

inline const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

inline Hops eccentricity(const Graph& g, Vertex u) {
  const auto row = g.distances().row(u);
  return *std::max_element(row.begin(), row.end());
}

inline Hops radius(const Graph& g) {
  Hops r = eccentricity(g, 0);
  for (Vertex u = 1; u < g.order(); ++u) r = std::min(r, eccentricity(g, u));
  return r;
}

inline Hops diameter(const Graph& g) {
  Hops d = 0;
  for (Vertex u = 0; u < g.order(); ++u) d = std::max(d, eccentricity(g, u));
  return d;
}

/// Cut-edges by iterative low-link DFS, as normalized edges in ascending order.
inline std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.order();
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> disc(n, kNone), low(n, 0), parent(n, kNone);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> out;
  Vertex time = 0;

  // Graph is connected, one DFS from 0 reaches everything. Simple graphs have
  // no parallel edges, so skipping the parent vertex is enough.
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next_child[u] < nbrs.size()) {
      const Vertex v = nbrs[next_child[u]++];
      if (disc[v] == kNone) {
        parent[v] = u;
        disc[v] = low[v] = time++;
        stack.push_back(v);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
      continue;
    }
    stack.pop_back();
    if (const Vertex p = parent[u]; p != kNone) {
      low[p] = std::min(low[p], low[u]);
      if (low[u] > disc[p]) out.push_back(Edge{p, u}.normalized());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The two sides of a graph cut at a bridge xy. Vertex ids inside each side are
/// dense and ascending in the original ids; `*_to_original` maps them back.
struct BridgeSplit {
  Graph side_x;
  Graph side_y;
  Vertex x;  ///< x as a vertex of side_x
  Vertex y;  ///< y as a vertex of side_y
  std::vector<Vertex> x_to_original;
  std::vector<Vertex> y_to_original;
};

inline BridgeSplit split_at_bridge(const Graph& g, Edge xy) {
  if (xy.u >= g.order() || xy.v >= g.order() || !g.adjacent(xy.u, xy.v))
    throw NotABridge("not an edge: " + std::to_string(xy.u) + "-" + std::to_string(xy.v));

  const std::size_t n = g.order();
  // Flood from x without crossing xy.
  std::vector<std::uint8_t> on_x_side(n, 0);
  std::deque<Vertex> queue{xy.u};
  on_x_side[xy.u] = 1;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a)) {
      if (a == xy.u && b == xy.v) continue;
      if (!on_x_side[b]) {
        on_x_side[b] = 1;
        queue.push_back(b);
      }
    }
  }
  if (on_x_side[xy.v])
    throw NotABridge("edge " + std::to_string(xy.u) + "-" + std::to_string(xy.v) + " lies on a cycle");

  std::vector<Vertex> local(n);
  std::vector<Vertex> x_map, y_map;
  for (Vertex v = 0; v < n; ++v) {
    auto& side = on_x_side[v] ? x_map : y_map;
    local[v] = static_cast<Vertex>(side.size());
    side.push_back(v);
  }
  auto induced = [&](const std::vector<Vertex>& members, bool x_side) {
    std::vector<Edge> es;
    std::vector<std::string> labels;
    for (const Edge& e : g.edges())
      if (static_cast<bool>(on_x_side[e.u]) == x_side && static_cast<bool>(on_x_side[e.v]) == x_side)
        es.push_back({local[e.u], local[e.v]});
    if (g.has_labels())
      for (Vertex v : members) labels.push_back(g.label(v));
    return Graph::build(members.size(), es, std::move(labels));
  };
  return BridgeSplit{induced(x_map, true), induced(y_map, false), local[xy.u], local[xy.v],
                     std::move(x_map), std::move(y_map)};
}

}  // namespace spanlab
