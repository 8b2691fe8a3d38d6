#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "spanlab/spanlab.hpp"

namespace spanlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // mismatch, counterexample or violated bound
  kInputError = 2,    // unreadable or malformed input, bad flags
  kDisconnected = 3,  // input graph is disconnected
  kTooLarge = 4,      // beyond the caps of the exhaustive routines
};

namespace detail {

enum class Format { Auto, EdgeList, Graph6 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::Syntax, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path, Format format) {
  if (format == Format::Auto)
    format = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0 ? Format::Graph6 : Format::EdgeList;
  const std::string text = read_file(path);
  if (format == Format::EdgeList) return io::parse_edge_list(text);
  // First non-blank line of a graph6 file.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return io::parse_graph6(line);
  throw ParseError(ParseError::Kind::LengthMismatch, 1, "no graph6 line in '" + path + "'");
}

inline std::vector<MovementRule> selected_rules(const std::string& rule) {
  if (rule == "all") return {kAllRules.begin(), kAllRules.end()};
  return {*parse_rule(rule)};
}

inline const std::vector<std::string>& rule_choices() {
  static const std::vector<std::string> v{"strong", "direct", "cartesian", "all"};
  return v;
}

inline const std::map<std::string, Format>& format_choices() {
  static const std::map<std::string, Format> m{
      {"auto", Format::Auto}, {"edgelist", Format::EdgeList}, {"graph6", Format::Graph6}};
  return m;
}

inline std::string triple(const SpanTriple& t) {
  return "(" + std::to_string(t.strong) + "," + std::to_string(t.direct) + "," + std::to_string(t.cartesian) + ")";
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace detail

inline int cmd_span(const Graph& g, const std::string& rule, bool machine, std::ostream& out) {
  const auto rules = detail::selected_rules(rule);
  if (machine) {
    out << "rad=" << radius(g);
    for (MovementRule r : rules) out << ' ' << span_name(r) << '=' << compute_span(g, r).value;
    out << '\n';
    return kOk;
  }
  out << std::left << std::setw(11) << "radius" << radius(g) << '\n';
  for (MovementRule r : rules) out << std::setw(11) << span_name(r) << compute_span(g, r).value << '\n';
  return kOk;
}

/// DOT to `out`, the step table (steps as columns, like a movement table) to `err`.
inline int cmd_witness(const Graph& g, MovementRule rule, bool machine, std::ostream& out, std::ostream& err) {
  const SpanReport rep = compute_span(g, rule);
  const TrackPair t = extract_witness_tracks(g, rep);
  const std::size_t l = t.length();
  if (machine) {
    for (std::size_t i = 0; i < l; ++i)
      err << "step=" << i + 1 << " alice=" << g.label(t.f[i]) << " bob=" << g.label(t.g[i])
          << " distance=" << g.distance(t.f[i], t.g[i]) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows(4);
    rows[0].push_back("step");
    rows[1].push_back("Alice");
    rows[2].push_back("Bob");
    rows[3].push_back("distance");
    for (std::size_t i = 0; i < l; ++i) {
      rows[0].push_back(std::to_string(i + 1));
      rows[1].push_back(g.label(t.f[i]));
      rows[2].push_back(g.label(t.g[i]));
      rows[3].push_back(std::to_string(g.distance(t.f[i], t.g[i])));
    }
    std::vector<std::size_t> width(l + 1, 0);
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    err << span_name(rule) << " span " << rep.value << ", witness of " << l << " steps\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        err << (c ? " | " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
      err << '\n';
    }
  }
  out << io::emit_witness_dot(g, t);
  return kOk;
}

inline int cmd_families(const families::SweepLimits& lim, bool machine, std::ostream& out) {
  std::size_t rows = 0, bad = 0;
  if (!machine)
    out << std::left << std::setw(10) << "family" << std::setw(8) << "radius" << std::setw(12) << "computed"
        << std::setw(12) << "expected" << "status\n";
  for (const auto& spec : families::sweep(lim)) {
    const Graph g = families::generate(spec);
    const SpanTriple got = compute_spans(g);
    const SpanTriple want = families::expected_spans(spec);
    const Hops rad = radius(g);
    const bool ok = got == want && rad == families::expected_radius(spec);
    ++rows;
    if (!ok) ++bad;
    if (machine) {
      out << "family=" << spec.name() << " rad=" << rad << " strong=" << got.strong << " direct=" << got.direct
          << " cartesian=" << got.cartesian << " expected=" << want.strong << ',' << want.direct << ','
          << want.cartesian << " status=" << (ok ? "PASS" : "MISMATCH") << '\n';
    } else {
      out << std::setw(10) << spec.name() << std::setw(8) << rad << std::setw(12) << detail::triple(got)
          << std::setw(12) << detail::triple(want) << (ok ? "PASS" : "MISMATCH") << '\n';
    }
  }
  if (bad == 0)
    out << "PASS (" << rows << " rows)\n";
  else
    out << "FAIL (" << bad << " of " << rows << " rows mismatch)\n";
  return bad == 0 ? kOk : kFailure;
}

inline int finish_verify(const verify::EnumerationReport& rep, std::ostream& out) {
  verify::write_report(out, rep);
  return rep.counterexamples.empty() ? kOk : kFailure;
}

inline int cmd_bounds(const Graph& g, bool machine, std::ostream& out) {
  const Hops rad = radius(g);
  const Hops strong = compute_span(g, MovementRule::Traditional).value;
  std::optional<Hops> cut;
  const bool small = g.order() < 3;
  if (!small) cut = verify::cut_edge_bound(g);
  const std::string cut_text = small ? "n/a" : cut ? std::to_string(*cut) : "no bridge";
  const bool ok = strong <= rad && (!cut || strong <= *cut);
  if (machine) {
    out << "rad=" << rad << " cut=" << (small ? "n/a" : cut ? std::to_string(*cut) : "none") << " strong=" << strong
        << " status=" << (ok ? "PASS" : "VIOLATED") << '\n';
  } else {
    out << std::left << std::setw(16) << "radius bound" << rad << '\n'
        << std::setw(16) << "cut-edge bound" << cut_text << '\n'
        << std::setw(16) << "strong span" << strong << '\n'
        << (ok ? "span within all bounds\n" : "BOUND VIOLATED\n");
  }
  return ok ? kOk : kFailure;
}

inline int cmd_named(const std::string& id, bool list, detail::Format format, std::ostream& out) {
  if (list) {
    for (const auto& name : families::named_ids()) out << name << '\n';
    return kOk;
  }
  const Graph g = families::named_graph(id);
  out << (format == detail::Format::Graph6 ? io::emit_graph6(g) + "\n" : io::emit_edge_list(g));
  return kOk;
}

/// Entry point; returns the process exit code. Never calls exit().
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Vertex spans of graphs: the largest safety distance two walkers covering a graph can keep",
               "spanlab"};
  app.require_subcommand(1, 1);

  std::string file, rule = "all", named_id;
  detail::Format format = detail::Format::Auto;
  bool machine = false, dedup = false, witnesses = false, list = false;
  families::SweepLimits lim;
  std::size_t enum_n = 0, count = 500, n_min = 6, n_max = 12;
  std::uint64_t seed = 42;
  double prob = 0.3;
  unsigned jobs = detail::default_jobs();
  std::string summary;

  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file (.g6 for graph6, anything else edge list)")->required();
    sub->add_option("--format", format, "input format")
        ->transform(CLI::CheckedTransformer(detail::format_choices(), CLI::ignore_case));
  };
  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", jobs, "worker threads (1 = sequential)")->check(CLI::PositiveNumber);
    sub->add_option("--summary", summary, "write one key=value record per graph to this file");
    sub->add_flag("--witnesses", witnesses, "also round-trip witnesses and track transformations");
  };

  auto* span = app.add_subcommand("span", "print the radius and span values of a graph");
  add_graph_input(span);
  span->add_option("--rule,-r", rule, "span to compute")->check(CLI::IsMember(detail::rule_choices()));
  span->add_flag("--machine", machine, "key=value output");

  std::string witness_rule = "strong";
  auto* witness = app.add_subcommand("witness", "print a witness walk pair: DOT on stdout, step table on stderr");
  add_graph_input(witness);
  witness->add_option("--rule,-r", witness_rule, "movement rule")
      ->check(CLI::IsMember({"strong", "direct", "cartesian", "traditional", "active", "lazy"}));
  witness->add_flag("--machine", machine, "key=value step records");

  auto* fam = app.add_subcommand("families", "reproduce the family span table");
  fam->add_option("--max-path", lim.max_path)->check(CLI::Range(2, 64));
  fam->add_option("--max-cycle", lim.max_cycle)->check(CLI::Range(3, 64));
  fam->add_option("--max-cube", lim.max_cube)->check(CLI::Range(2, 6));
  fam->add_option("--max-bipartite", lim.max_bipartite)->check(CLI::Range(2, 16));
  fam->add_option("--max-complete", lim.max_complete)->check(CLI::Range(4, 32));
  fam->add_option("--max-paramecium", lim.max_paramecium)->check(CLI::Range(3, 32));
  fam->add_option("--max-tree", lim.max_tree)->check(CLI::Range(1, 6));
  fam->add_flag("--machine", machine, "key=value rows");

  auto* venum = app.add_subcommand("verify-enumerate", "check the span theorems on every connected graph of order n");
  venum->add_option("--n,-n", enum_n, "graph order (<= 7, <= 6 with --dedup)")->required();
  venum->add_flag("--dedup", dedup, "one graph per isomorphism class");
  add_verify_flags(venum);

  auto* vrand = app.add_subcommand("verify-random", "check the span theorems on seeded random graphs");
  vrand->add_option("--count", count, "number of graphs");
  vrand->add_option("--seed", seed, "RNG seed (SPANLAB_SEED overrides)");
  vrand->add_option("--n-min", n_min)->check(CLI::PositiveNumber);
  vrand->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  vrand->add_option("--p", prob, "edge probability")->check(CLI::Range(0.0, 1.0));
  add_verify_flags(vrand);

  auto* bounds = app.add_subcommand("bounds", "compare the strong span with the radius and cut-edge bounds");
  add_graph_input(bounds);
  bounds->add_flag("--machine", machine, "key=value output");

  auto* named = app.add_subcommand("named", "print a figure graph");
  named->add_option("id", named_id, "figure id (see --list)");
  named->add_flag("--list", list, "list the ids");
  named->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(detail::format_choices(), CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (*named && !list && named_id.empty()) {
    err << "named: an id or --list is required\n";
    return kInputError;
  }
  if (*vrand && n_min > n_max) {
    err << "verify-random: --n-min must not exceed --n-max\n";
    return kInputError;
  }
  if (*vrand && prob <= 0.0) {
    err << "verify-random: --p must be positive\n";
    return kInputError;
  }

  try {
    if (*span) return cmd_span(detail::load_graph(file, format), rule, machine, out);
    if (*witness) return cmd_witness(detail::load_graph(file, format), *parse_rule(witness_rule), machine, out, err);
    if (*fam) return cmd_families(lim, machine, out);
    if (*bounds) return cmd_bounds(detail::load_graph(file, format), machine, out);
    if (*named) return cmd_named(named_id, list, format, out);

    std::unique_ptr<std::ofstream> summary_file;
    verify::TheoremChecker::RecordSink sink;
    if (!summary.empty()) {
      summary_file = std::make_unique<std::ofstream>(summary);
      if (!*summary_file) {
        err << "cannot write '" << summary << "'\n";
        return kInputError;
      }
      sink = [&](const verify::GraphRecord& r) { verify::write_record(*summary_file, r); };
    }
    verify::CheckOptions opt;
    opt.jobs = jobs;
    opt.witnesses = witnesses;
    if (*venum) {
      out << "enumerating connected graphs on " << enum_n << " vertices" << (dedup ? " up to isomorphism" : "")
          << '\n';
      return finish_verify(verify::check_enumeration(enum_n, dedup, opt, sink), out);
    }
    if (*vrand) {
      if (const char* env = std::getenv("SPANLAB_SEED"); env && *env) seed = std::stoull(env);
      out << "random graphs: count=" << count << " n=" << n_min << ".." << n_max << " p=" << prob << " seed=" << seed
          << '\n';
      const auto corpus = verify::random_graphs(count, n_min, n_max, prob, seed);
      verify::TheoremChecker checker(opt, sink);
      checker.check(corpus);
      return finish_verify(checker.report(), out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return e.kind() == GraphError::Kind::Disconnected ? kDisconnected : kInputError;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const UnknownId& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid SPANLAB_SEED: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "invalid SPANLAB_SEED: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace spanlab::cli
