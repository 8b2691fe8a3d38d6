#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spanlab/error.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/span.hpp"

namespace spanlab::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool parse_count(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

/// Parses the edge-list format:
///
///     # comment
///     n 6
///     0 1
///     1 2
///
/// Blank lines and lines starting with '#' are skipped. The first remaining
/// line must be the "n <count>" header; every later line one "u v" pair.
/// Throws ParseError(Syntax) with the offending line, or GraphError from
/// Graph::build.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = detail::fields(line);
    auto fail = [&](const std::string& why) {
      throw ParseError(ParseError::Kind::Syntax, line_no, "line " + std::to_string(line_no) + ": " + why);
    };
    if (!n) {
      std::uint64_t count = 0;
      if (f.size() != 2 || f[0] != "n" || !detail::parse_count(f[1], count)) fail("expected header 'n <count>'");
      n = count;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (f.size() != 2 || !detail::parse_count(f[0], u) || !detail::parse_count(f[1], v))
      fail("expected an edge 'u v' of two non-negative integers");
    if (u >= *n || v >= *n) fail("vertex out of range 0.." + std::to_string(*n == 0 ? 0 : *n - 1));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!n) throw ParseError(ParseError::Kind::Syntax, line_no, "missing header 'n <count>'");
  return Graph::build(static_cast<std::size_t>(*n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one short-form graph6 line (n <= 62). Surrounding whitespace is
/// ignored. Throws ParseError(BadChar / LengthMismatch) or GraphError.
inline Graph parse_graph6(std::string_view line) {
  line = detail::trim(line);
  if (line.size() >= 2 && line[0] == '>' && line[1] == '>')
    throw ParseError(ParseError::Kind::BadChar, 1, "graph6 header '>>graph6<<' is not supported");
  if (line.empty()) throw ParseError(ParseError::Kind::LengthMismatch, 1, "empty graph6 string");
  for (std::size_t k = 0; k < line.size(); ++k)
    if (line[k] < 63 || line[k] > 126)
      throw ParseError(ParseError::Kind::BadChar, 1, "invalid graph6 character at offset " + std::to_string(k));
  if (line[0] == 126)
    throw ParseError(ParseError::Kind::BadChar, 1, "only the short graph6 form (n <= 62) is supported");

  const std::size_t n = static_cast<std::size_t>(line[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() != 1 + groups)
    throw ParseError(ParseError::Kind::LengthMismatch, 1,
                     "graph6 body has " + std::to_string(line.size() - 1) + " characters, expected " +
                         std::to_string(groups));

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) { return ((line[1 + idx / 6] - 63) >> (5 - idx % 6)) & 1; };
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (bit(k++)) edges.push_back({u, v});
  for (std::size_t pad = bits; pad < groups * 6; ++pad)
    if (bit(pad)) throw ParseError(ParseError::Kind::BadChar, 1, "non-zero graph6 padding bits");
  return Graph::build(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw TooLarge("graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

/// DOT rendering of a witness: the base graph as undirected gray edges, each
/// of Alice's moves as a red arrow and each of Bob's as a blue one, labeled
/// with the step number. Stay steps draw nothing. Throws InvalidTracks when
/// the tracks do not validate against their rule.
inline std::string emit_witness_dot(const Graph& g, const TrackPair& t) {
  const TrackValidation v = validate_tracks(g, t);
  if (!v.conforms) throw InvalidTracks("tracks do not follow the " + std::string(rule_name(t.rule)) + " movement rule");

  std::ostringstream os;
  auto quoted = [&](Vertex u) { return "\"" + g.label(u) + "\""; };
  os << "digraph witness {\n";
  os << "  label=\"" << span_name(t.rule) << " span witness, min distance " << v.min_distance << "\";\n";
  for (Vertex u = 0; u < g.order(); ++u) os << "  " << quoted(u) << ";\n";
  for (const Edge& e : g.edges()) os << "  " << quoted(e.u) << " -> " << quoted(e.v) << " [dir=none, color=gray];\n";
  auto arrows = [&](const std::vector<Vertex>& walk, const char* color, const char* who) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      if (walk[i] != walk[i + 1])
        os << "  " << quoted(walk[i]) << " -> " << quoted(walk[i + 1]) << " [color=" << color << ", label=\"" << who
           << (i + 1) << "\"];\n";
  };
  arrows(t.f, "red", "A");
  arrows(t.g, "blue", "B");
  os << "}\n";
  return os.str();
}

}  // namespace spanlab::io
