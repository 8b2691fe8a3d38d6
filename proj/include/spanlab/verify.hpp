#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "spanlab/error.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/io.hpp"
#include "spanlab/product.hpp"
#include "spanlab/span.hpp"

namespace spanlab::verify {

// ---------------------------------------------------------------------------
// Oracle

inline constexpr std::size_t kOracleMaxOrder = 6;

/// One configuration of the explicit two-actor search.
struct JointState {
  Vertex pos_a = 0;
  Vertex pos_b = 0;
  std::uint32_t seen_a = 0;  ///< bit v set when Alice has visited v
  std::uint32_t seen_b = 0;
};

/// Span by explicit search over joint states (positions plus visited sets).
///
/// For each r, descending from the radius, runs a multi-source BFS from every
/// (a, b) with d(a, b) >= r and singleton visited sets, moving only through
/// positions at distance >= r, and succeeds when both visited sets become
/// full. Traditional allows both actors to stay; Active and Lazy do not.
/// Shares nothing with the pair-graph engine beyond the distance matrix.
/// Throws TooLarge above kOracleMaxOrder vertices.
inline Hops oracle_span(const Graph& g, MovementRule rule) {
  const std::size_t n = g.order();
  if (n > kOracleMaxOrder)
    throw TooLarge("oracle is capped at " + std::to_string(kOracleMaxOrder) + " vertices, got " + std::to_string(n));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::size_t masks = std::size_t{1} << n;
  auto encode = [&](const JointState& s) {
    return ((static_cast<std::size_t>(s.pos_a) * n + s.pos_b) * masks + s.seen_a) * masks + s.seen_b;
  };

  std::vector<std::vector<Vertex>> moves(n);  // own vertex first means "stay"
  for (Vertex u = 0; u < n; ++u) {
    moves[u].push_back(u);
    for (Vertex w : g.neighbors(u)) moves[u].push_back(w);
  }

  std::vector<std::uint8_t> visited(n * n * masks * masks);
  std::vector<JointState> queue;
  for (Hops r = radius(g); r >= 0; --r) {
    std::fill(visited.begin(), visited.end(), 0);
    queue.clear();
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (g.distance(a, b) >= r) {
          JointState s{a, b, std::uint32_t{1} << a, std::uint32_t{1} << b};
          visited[encode(s)] = 1;
          queue.push_back(s);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const JointState s = queue[head];
      if (s.seen_a == full && s.seen_b == full) return r;
      for (std::size_t i = 0; i < moves[s.pos_a].size(); ++i) {
        for (std::size_t j = 0; j < moves[s.pos_b].size(); ++j) {
          const bool a_moves = i != 0, b_moves = j != 0;
          bool allowed = false;
          switch (rule) {
            case MovementRule::Traditional: allowed = true; break;
            case MovementRule::Active: allowed = a_moves && b_moves; break;
            case MovementRule::Lazy: allowed = a_moves != b_moves; break;
          }
          if (!allowed) continue;
          const Vertex a = moves[s.pos_a][i], b = moves[s.pos_b][j];
          if (g.distance(a, b) < r) continue;
          const JointState t{a, b, s.seen_a | (std::uint32_t{1} << a), s.seen_b | (std::uint32_t{1} << b)};
          if (auto& v = visited[encode(t)]; !v) {
            v = 1;
            queue.push_back(t);
          }
        }
      }
    }
  }
  throw std::logic_error("oracle found no covering walk at distance 0");
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kEnumerateMaxOrder = 7;
inline constexpr std::size_t kDedupMaxOrder = 6;

namespace detail {

// Bit k of an edge mask is the k-th upper-triangle entry in column order:
// (0,1), (0,2), (1,2), (0,3), ... , matching graph6.
inline std::vector<Edge> edge_slots(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) slots.push_back({u, v});
  return slots;
}

inline bool mask_connected(std::size_t n, std::uint64_t mask, const std::vector<Edge>& slots) {
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (mask >> k & 1) {
      adj[slots[k].u] |= 1u << slots[k].v;
      adj[slots[k].v] |= 1u << slots[k].u;
    }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (std::uint32_t{1} << n) - 1;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask, const std::vector<Edge>& slots) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (mask >> k & 1) edges.push_back(slots[k]);
  return Graph::build(n, edges);
}

}  // namespace detail

/// Smallest edge mask over all relabelings of `g` (brute force over n!
/// permutations). Two graphs are isomorphic iff their canonical masks agree.
inline std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kDedupMaxOrder) throw TooLarge("canonical form is capped at " + std::to_string(kDedupMaxOrder) + " vertices");
  const auto slots = detail::edge_slots(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (g.adjacent(perm[slots[k].u], perm[slots[k].v])) mask |= std::uint64_t{1} << k;
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_mask(a) == canonical_mask(b);
}

/// Calls `visit(const Graph&)` on every connected labeled graph on n
/// vertices, by ascending edge mask. With `dedup`, only the first graph of
/// each isomorphism class is visited. Throws TooLarge for n > 7, or n > 6
/// with dedup.
template <class Visitor>
void for_each_connected(std::size_t n, bool dedup, Visitor&& visit) {
  if (n == 0 || n > kEnumerateMaxOrder)
    throw TooLarge("enumeration supports 1 <= n <= " + std::to_string(kEnumerateMaxOrder) + ", got " + std::to_string(n));
  if (dedup && n > kDedupMaxOrder)
    throw TooLarge("isomorphism dedup supports n <= " + std::to_string(kDedupMaxOrder) + ", got " + std::to_string(n));
  const auto slots = detail::edge_slots(n);
  std::vector<std::uint8_t> seen_class;
  if (dedup) seen_class.assign(std::size_t{1} << slots.size(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    if (!detail::mask_connected(n, mask, slots)) continue;
    Graph g = detail::graph_from_mask(n, mask, slots);
    if (dedup) {
      auto& flag = seen_class[canonical_mask(g)];
      if (flag) continue;
      flag = 1;
    }
    visit(g);
  }
}

inline std::vector<Graph> enumerate_connected(std::size_t n, bool dedup) {
  std::vector<Graph> out;
  for_each_connected(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Erdos-Renyi G(n, p) draws with n uniform in [n_min, n_max], redrawn until
/// connected. Deterministic for a fixed seed.
inline std::vector<Graph> random_graphs(std::size_t count, std::size_t n_min, std::size_t n_max, double edge_prob,
                                        std::uint64_t seed) {
  if (n_min == 0 || n_min > n_max) throw ParameterOutOfRange("need 1 <= n_min <= n_max");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0))
    throw ParameterOutOfRange("edge probability must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(n_min, n_max);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Graph> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t n = order(rng);
    for (;;) {
      std::vector<Edge> edges;
      for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
          if (coin(rng)) edges.push_back({u, v});
      try {
        out.push_back(Graph::build(n, edges));
        break;
      } catch (const GraphError& e) {
        if (e.kind() != GraphError::Kind::Disconnected) throw;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

/// Smallest cut-edge bound max(ecc_{G1}(x), ecc_{G2}(y)) over all bridges xy,
/// or nullopt when the graph is bridgeless. Throws OrderTooSmall below three
/// vertices.
inline std::optional<Hops> cut_edge_bound(const Graph& g) {
  if (g.order() < 3) throw OrderTooSmall("cut-edge bound needs at least 3 vertices");
  std::optional<Hops> best;
  for (const Edge& e : bridges(g)) {
    const BridgeSplit s = split_at_bridge(g, e);
    const Hops b = std::max(eccentricity(s.side_x, s.x), eccentricity(s.side_y, s.y));
    if (!best || b < *best) best = b;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Theorem checks

struct Counterexample {
  std::string graph6;
  std::string property;
};

/// Per-graph outcome, the unit of the machine-readable summary.
struct GraphRecord {
  std::string graph6;
  std::size_t order = 0;
  Hops radius = 0;
  SpanTriple spans;
  std::optional<Hops> cut_bound;
  bool oracle_checked = false;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool cartesian_exceeds_direct() const noexcept { return spans.cartesian > spans.direct; }
};

struct EnumerationReport {
  std::size_t n = 0;  ///< order for single-order corpora, 0 when mixed
  std::size_t graphs_checked = 0;
  std::size_t oracle_checked = 0;
  std::vector<Counterexample> counterexamples;
  /// graph6 of every graph whose cartesian span exceeds its direct span.
  std::vector<std::string> cartesian_exceeds_direct;
};

struct CheckOptions {
  unsigned jobs = 1;
  /// Oracle agreement is asserted for graphs up to this order.
  std::size_t oracle_max_order = 5;
  /// Also round-trip every witness and both track transformations.
  bool witnesses = false;
};

/// Runs every check on a single graph.
inline GraphRecord check_graph(const Graph& g, const CheckOptions& opt) {
  GraphRecord rec;
  rec.graph6 = g.order() <= io::kGraph6MaxOrder ? io::emit_graph6(g) : std::string("-");
  rec.order = g.order();
  rec.radius = radius(g);
  std::array<SpanReport, 3> reports{compute_span(g, MovementRule::Traditional), compute_span(g, MovementRule::Active),
                                    compute_span(g, MovementRule::Lazy)};
  rec.spans = {reports[0].value, reports[1].value, reports[2].value};
  auto violate = [&](std::string what) { rec.violations.push_back(std::move(what)); };

  if (rec.spans.strong < std::max(rec.spans.direct, rec.spans.cartesian)) violate("strong>=max(direct,cartesian)");
  if (std::abs(rec.spans.direct - rec.spans.cartesian) > 1) violate("|direct-cartesian|<=1");
  for (MovementRule r : kAllRules)
    if (rec.spans.of(r) > rec.radius) violate(std::string(span_name(r)) + "<=radius");
  if (g.order() >= 3) {
    rec.cut_bound = cut_edge_bound(g);
    if (rec.cut_bound && rec.spans.strong > *rec.cut_bound) violate("strong<=cut_edge_bound");
  }
  if (g.order() <= opt.oracle_max_order) {
    rec.oracle_checked = true;
    for (MovementRule r : kAllRules)
      if (oracle_span(g, r) != rec.spans.of(r)) violate(std::string(span_name(r)) + "==oracle");
  }
  if (opt.witnesses) {
    for (const SpanReport& rep : reports) {
      const std::string name(span_name(rep.rule));
      const TrackPair t = extract_witness_tracks(g, rep);
      const TrackValidation v = validate_tracks(g, t);
      if (!v.valid() || v.min_distance != rep.value) violate(name + " witness");
      if (rep.rule == MovementRule::Active) {
        const TrackValidation lv = validate_tracks(g, direct_to_lazy(g, t));
        if (!lv.valid() || lv.min_distance < rep.value - 1) violate("direct_to_lazy contract");
      }
      if (rep.rule == MovementRule::Lazy) {
        const TrackValidation dv = validate_tracks(g, lazy_to_direct(g, t));
        if (!dv.valid() || dv.min_distance < rep.value - 1) violate("lazy_to_direct contract");
      }
    }
  }
  return rec;
}

/// Checks graphs in batches, optionally across threads, and keeps a running
/// report. Records reach the sink in corpus order whatever the job count.
class TheoremChecker {
 public:
  using RecordSink = std::function<void(const GraphRecord&)>;

  explicit TheoremChecker(CheckOptions opt = {}, RecordSink sink = {}) : opt_(opt), sink_(std::move(sink)) {}

  void check(std::span<const Graph> batch) {
    std::vector<GraphRecord> records(batch.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt_.jobs, static_cast<unsigned>(batch.size())));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) records[i] = check_graph(batch[i], opt_);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += jobs) records[i] = check_graph(batch[i], opt_);
        });
      for (auto& t : pool) t.join();
    }
    for (const GraphRecord& rec : records) merge(rec);
  }

  const EnumerationReport& report() const noexcept { return report_; }

 private:
  void merge(const GraphRecord& rec) {
    if (report_.graphs_checked == 0)
      report_.n = rec.order;
    else if (report_.n != rec.order)
      report_.n = 0;
    ++report_.graphs_checked;
    if (rec.oracle_checked) ++report_.oracle_checked;
    for (const auto& v : rec.violations) report_.counterexamples.push_back({rec.graph6, v});
    if (rec.cartesian_exceeds_direct()) report_.cartesian_exceeds_direct.push_back(rec.graph6);
    if (sink_) sink_(rec);
  }

  CheckOptions opt_;
  RecordSink sink_;
  EnumerationReport report_;
};

inline EnumerationReport check_theorems(std::span<const Graph> corpus, const CheckOptions& opt = {},
                                        TheoremChecker::RecordSink sink = {}) {
  TheoremChecker checker(opt, std::move(sink));
  checker.check(corpus);
  return checker.report();
}

/// Streams the enumeration through a checker in batches, so n = 7 never holds
/// the whole corpus in memory.
inline EnumerationReport check_enumeration(std::size_t n, bool dedup, const CheckOptions& opt = {},
                                           TheoremChecker::RecordSink sink = {}) {
  constexpr std::size_t kBatch = 4096;
  TheoremChecker checker(opt, std::move(sink));
  std::vector<Graph> batch;
  for_each_connected(n, dedup, [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() == kBatch) {
      checker.check(batch);
      batch.clear();
    }
  });
  checker.check(batch);
  EnumerationReport rep = checker.report();
  rep.n = n;
  return rep;
}

/// One key=value record per graph.
inline void write_record(std::ostream& os, const GraphRecord& r) {
  os << "g6=" << r.graph6 << " n=" << r.order << " rad=" << r.radius << " strong=" << r.spans.strong
     << " direct=" << r.spans.direct << " cartesian=" << r.spans.cartesian << " cut=";
  if (r.cut_bound)
    os << *r.cut_bound;
  else
    os << "none";
  os << " oracle=" << (r.oracle_checked ? 1 : 0) << " pass=" << (r.passed() ? 1 : 0);
  if (!r.passed()) {
    os << " violations=";
    for (std::size_t i = 0; i < r.violations.size(); ++i) os << (i ? "," : "") << r.violations[i];
  }
  os << '\n';
}

inline void write_report(std::ostream& os, const EnumerationReport& rep) {
  os << "graphs checked: " << rep.graphs_checked << '\n';
  os << "oracle cross-checked: " << rep.oracle_checked << '\n';
  os << rep.counterexamples.size() << " counterexamples; " << rep.cartesian_exceeds_direct.size()
     << " graphs with cartesian>direct\n";
  for (const auto& c : rep.counterexamples) os << "counterexample " << c.graph6 << " violates " << c.property << '\n';
  for (const auto& g6 : rep.cartesian_exceeds_direct) os << "cartesian>direct " << g6 << '\n';
}

}  // namespace spanlab::verify
