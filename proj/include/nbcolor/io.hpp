#pragma once

// Text formats. All of them use 1-based vertex labels.
//
//   edge list:        "n m" then one "u v" line per edge
//   rotation system:  "n" then one "v: u1 u2 ... ud" line per vertex (clockwise)
//   coloring:         one "v c" line per vertex
//
// Lines starting with '#' and blank lines are ignored everywhere.

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nbcolor/coloring.hpp"
#include "nbcolor/graph.hpp"

namespace nbcolor {

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

inline std::vector<long long> integers(const std::string& line) {
  std::vector<long long> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::MalformedInput, "not an integer: '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

inline Vertex label_to_vertex(long long label, std::size_t n) {
  if (label < 1 || static_cast<std::size_t>(label) > n)
    throw Error(ErrorCode::MalformedInput, "vertex label " + std::to_string(label) + " outside 1.." + std::to_string(n));
  return static_cast<Vertex>(label - 1);
}

}  // namespace detail

/// Parses an edge list. Duplicate edges collapse; the header's m is checked
/// for syntax only, the edge lines are authoritative.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "empty edge list");
  auto header = detail::integers(lines[0]);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw Error(ErrorCode::MalformedInput, "header must be 'n m'");
  Graph g(static_cast<std::size_t>(header[0]));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = detail::integers(lines[i]);
    if (uv.size() != 2) throw Error(ErrorCode::MalformedInput, "edge line must be 'u v': '" + lines[i] + "'");
    Vertex u = detail::label_to_vertex(uv[0], g.vertex_count());
    Vertex v = detail::label_to_vertex(uv[1], g.vertex_count());
    g.add_edge(u, v);
  }
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

inline RotationSystem parse_rotation(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "empty rotation system");
  auto header = detail::integers(lines[0]);
  if (header.size() != 1 || header[0] < 0) throw Error(ErrorCode::MalformedInput, "header must be 'n'");
  const auto n = static_cast<std::size_t>(header[0]);
  RotationSystem rot(n);
  std::vector<char> given(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto colon = lines[i].find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::MalformedInput, "rotation line needs 'v:': '" + lines[i] + "'");
    auto head = detail::integers(lines[i].substr(0, colon));
    if (head.size() != 1) throw Error(ErrorCode::MalformedInput, "bad vertex label in '" + lines[i] + "'");
    Vertex v = detail::label_to_vertex(head[0], n);
    if (given[v]) throw Error(ErrorCode::MalformedInput, "vertex " + std::to_string(v + 1) + " listed twice");
    given[v] = 1;
    for (long long u : detail::integers(lines[i].substr(colon + 1))) rot[v].push_back(detail::label_to_vertex(u, n));
  }
  for (Vertex v = 0; v < n; ++v)
    if (!given[v]) throw Error(ErrorCode::MalformedInput, "missing rotation for vertex " + std::to_string(v + 1));
  return rot;
}

/// Parses and validates a rotation system (InconsistentRotation, NotPlane).
inline PlaneEmbedding parse_embedding(std::string_view text) { return PlaneEmbedding::from_rotation(parse_rotation(text)); }

inline std::string serialize_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  out << rot.size() << '\n';
  for (Vertex v = 0; v < rot.size(); ++v) {
    out << v + 1 << ':';
    for (Vertex u : rot[v]) out << ' ' << u + 1;
    out << '\n';
  }
  return out.str();
}

inline std::string serialize_embedding(const PlaneEmbedding& e) { return serialize_rotation(e.rotation()); }

inline Coloring parse_coloring(std::string_view text, std::size_t n) {
  std::vector<int> colors(n, 0);
  for (const auto& line : detail::content_lines(text)) {
    auto vc = detail::integers(line);
    if (vc.size() != 2) throw Error(ErrorCode::MalformedInput, "coloring line must be 'v c': '" + line + "'");
    Vertex v = detail::label_to_vertex(vc[0], n);
    if (vc[1] < 1) throw Error(ErrorCode::MalformedInput, "colors are positive integers");
    if (colors[v] != 0) throw Error(ErrorCode::MalformedInput, "vertex " + std::to_string(v + 1) + " colored twice");
    colors[v] = static_cast<int>(vc[1]);
  }
  for (Vertex v = 0; v < n; ++v)
    if (colors[v] == 0) throw Error(ErrorCode::MalformedInput, "vertex " + std::to_string(v + 1) + " has no color");
  return Coloring(std::move(colors));
}

inline std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  for (Vertex v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
  return out.str();
}

/// DOT rendering; colors (when given) become "v:c" labels.
inline std::string to_dot(const Graph& g, const Coloring* coloring = nullptr,
                          const std::vector<std::string>* names = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v + 1 << " [label=\"";
    if (names && v < names->size())
      out << (*names)[v];
    else
      out << v + 1;
    if (coloring) out << ':' << (*coloring)[v];
    out << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nbcolor
