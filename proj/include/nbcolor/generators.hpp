#pragma once

// Seeded random instances for the property suites. Only the raw mt19937_64
// stream is used (standard distributions are not portable across library
// implementations), so a seed gives the same instance everywhere.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "nbcolor/graph.hpp"

namespace nbcolor {

namespace detail {

/// Uniform integer in [0, n) by rejection sampling.
inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

inline bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

/// Tries to delete about `fraction` of the edges, skipping bridges.
template <class Remove>
void thin_edges(Graph& g, std::mt19937_64& rng, double fraction, Remove&& remove) {
  auto edges = g.edges();
  const auto attempts = static_cast<std::size_t>(fraction * static_cast<double>(edges.size()));
  for (std::size_t t = 0; t < attempts && !edges.empty(); ++t) {
    const std::size_t i = below(rng, edges.size());
    const Edge e = edges[i];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    Graph h(g.vertex_count());
    for (const Edge& f : g.edges())
      if (f != e) h.add_edge(f.first, f.second);
    if (!h.is_connected()) continue;
    remove(e);
    g = std::move(h);
  }
}

}  // namespace detail

/// Random plane triangulation grown by inserting each new vertex into a
/// uniformly chosen face, then thinned by deleting about `thin` of the edges
/// (never disconnecting). n must be at least 3.
inline PlaneEmbedding random_planar(std::size_t n, std::uint64_t seed, double thin = 0.0) {
  if (n < 3) throw Error(ErrorCode::MalformedInput, "random_planar needs n >= 3");
  std::mt19937_64 rng(seed);
  RotationSystem rot(n);
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
  auto insert_after = [&](Vertex at, Vertex after, Vertex x) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), after) + 1, x);
  };
  for (Vertex x = 3; x < n; ++x) {
    const std::size_t fi = detail::below(rng, faces.size());
    const auto [a, b, c] = faces[fi];
    insert_after(b, a, x);
    insert_after(c, b, x);
    insert_after(a, c, x);
    rot[x] = {b, a, c};
    faces[fi] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  Graph g = graph_of(rot);
  detail::thin_edges(
      g, rng, thin,
      [&](Edge e) {
        auto drop = [&](Vertex at, Vertex other) {
          auto& r = rot[at];
          r.erase(std::find(r.begin(), r.end(), other));
        };
        drop(e.first, e.second);
        drop(e.second, e.first);
      });
  return PlaneEmbedding::from_rotation(std::move(rot));
}

/// Random triangulated polygon on 0..n-1 (so outerplanar), then thinned
/// without disconnecting it.
inline Graph random_outerplanar(std::size_t n, std::uint64_t seed, double thin = 0.0) {
  if (n < 3) throw Error(ErrorCode::MalformedInput, "random_outerplanar needs n >= 3");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  // Triangulate the polygon chain lo..hi whose side lo-hi is already present.
  std::vector<std::pair<Vertex, Vertex>> todo = {{0, static_cast<Vertex>(n - 1)}};
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    if (hi - lo < 2) continue;
    const auto apex = static_cast<Vertex>(lo + 1 + detail::below(rng, hi - lo - 1));
    g.add_edge(lo, apex);
    g.add_edge(apex, hi);
    todo.push_back({lo, apex});
    todo.push_back({apex, hi});
  }
  detail::thin_edges(g, rng, thin, [](Edge) {});
  return g;
}

/// Erdos-Renyi G(n, p).
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (detail::chance(rng, p)) g.add_edge(u, v);
  return g;
}

}  // namespace nbcolor
