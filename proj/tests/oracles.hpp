#pragma once

// Independent reference implementations used by the tests. They share no
// code with the library's checkers or solver beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "nbcolor/graph.hpp"
#include "nbcolor/variants.hpp"

namespace oracle {

using nbcolor::Graph;
using nbcolor::Vertex;

// Does the multiset `cs` satisfy CF (some value exactly once) or UM?
inline bool cf_ok(const std::vector<int>& cs) {
  for (int c : cs)
    if (std::count(cs.begin(), cs.end(), c) == 1) return true;
  return false;
}

inline bool um_ok(const std::vector<int>& cs) {
  if (cs.empty()) return false;
  int m = *std::max_element(cs.begin(), cs.end());
  return std::count(cs.begin(), cs.end(), m) == 1;
}

inline bool valid(const Graph& g, const std::vector<int>& col, bool proper, bool um, bool closed) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> hood;
    if (closed) hood.push_back(col[v]);
    for (Vertex u : g.neighbors(v)) {
      if (proper && col[u] == col[v]) return false;
      hood.push_back(col[u]);
    }
    if (!(um ? um_ok(hood) : cf_ok(hood))) return false;
  }
  return true;
}

inline bool valid(const Graph& g, const std::vector<int>& col, nbcolor::VariantSpec s) {
  return valid(g, col, s.proper(), s.rule == nbcolor::Rule::UniqueMaximum, s.scope == nbcolor::Scope::Closed);
}

// First assignment in lexicographic order over vertices 0..n-1 accepted by
// `ok`, enumerating all k^n assignments.
inline std::optional<std::vector<int>> enumerate(std::size_t n, int k, const std::function<bool(const std::vector<int>&)>& ok) {
  std::vector<int> col(n, 1);
  while (true) {
    if (ok(col)) return col;
    std::size_t i = n;
    while (i > 0 && col[i - 1] == k) col[--i] = 1;
    if (i == 0) return std::nullopt;
    ++col[i - 1];
  }
}

inline bool naive_exists(const Graph& g, nbcolor::VariantSpec s, int k) {
  return enumerate(g.vertex_count(), k, [&](const std::vector<int>& c) { return valid(g, c, s); }).has_value();
}

inline bool proper_ok(const Graph& g, const std::vector<int>& c) {
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

inline int naive_chromatic(const Graph& g) {
  for (int k = 1;; ++k)
    if (enumerate(g.vertex_count(), k, [&](const std::vector<int>& c) { return proper_ok(g, c); })) return k;
}

// Canonical adjacency bitmask (minimum over all vertex permutations).
inline std::uint32_t canonical(std::size_t n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) pairs.push_back({i, j});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  std::map<std::pair<int, int>, int> bit;
  for (std::size_t b = 0; b < pairs.size(); ++b) bit[pairs[b]] = static_cast<int>(b);
  do {
    std::uint32_t m = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) {
        int u = perm[pairs[b].first], v = perm[pairs[b].second];
        m |= 1u << bit[{std::min(u, v), std::max(u, v)}];
      }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph from_mask(std::size_t n, std::uint32_t mask) {
  Graph g(n);
  std::size_t b = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++b)
      if (mask >> b & 1) g.add_edge(i, j);
  return g;
}

// One representative per isomorphism class, for every n in 1..max_n.
inline std::vector<Graph> all_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      if (!seen.insert(canonical(n, mask)).second) continue;
      out.push_back(from_mask(n, mask));
    }
  }
  return out;
}

// Every rotation system of g, by cycling through the cyclic orders at each
// vertex (the first neighbor stays in front).
inline void for_each_rotation(const Graph& g, const std::function<bool(const nbcolor::RotationSystem&)>& visit) {
  nbcolor::RotationSystem rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rot[v] = g.neighbors(v);
  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    if (v == g.vertex_count()) return visit(rot);
    if (rot[v].size() <= 2) return rec(v + 1);
    std::sort(rot[v].begin() + 1, rot[v].end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
    return false;
  };
  rec(0);
}

inline double rotation_count(const Graph& g) {
  double c = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 2; i < g.degree(v); ++i) c *= static_cast<double>(i);
  return c;
}

// Genus-zero test by our own face count: n - m + f == 2c.
inline bool planar_rotation(const Graph& g, const nbcolor::RotationSystem& rot, std::size_t* faces_out = nullptr,
                            std::vector<std::set<Vertex>>* face_sets = nullptr) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t f = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (rot[u].empty()) {
      ++f;
      if (face_sets) face_sets->push_back({u});
    }
    for (Vertex v : rot[u]) {
      if (seen.count({u, v})) continue;
      ++f;
      std::set<Vertex> fs;
      Vertex a = u, b = v;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        fs.insert(a);
        const auto& r = rot[b];
        auto it = std::find(r.begin(), r.end(), a);
        ++it;
        if (it == r.end()) it = r.begin();
        a = b;
        b = *it;
      }
      if (face_sets) face_sets->push_back(fs);
    }
  }
  if (faces_out) *faces_out = f;
  long long n = static_cast<long long>(g.vertex_count()), m = static_cast<long long>(g.edge_count());
  auto labels = g.component_labels();
  long long c = labels.empty() ? 0 : static_cast<long long>(*std::max_element(labels.begin(), labels.end()) + 1);
  return n - m + static_cast<long long>(f) == 2 * c;
}

inline bool exhaustive_planar(const Graph& g) {
  bool found = false;
  for_each_rotation(g, [&](const nbcolor::RotationSystem& rot) { return found = planar_rotation(g, rot); });
  return found;
}

// Outerplanar iff the vertices can be put on a circle with every edge a
// non-crossing chord. Tries all cyclic orders with vertex 0 first.
inline bool exhaustive_outerplanar(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 3) return true;
  const auto edges = g.edges();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::vector<std::size_t> pos(n);
  do {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    bool crossing = false;
    for (std::size_t i = 0; i < edges.size() && !crossing; ++i) {
      auto a = pos[edges[i].first], b = pos[edges[i].second];
      if (a > b) std::swap(a, b);
      for (std::size_t j = i + 1; j < edges.size() && !crossing; ++j) {
        const auto c = pos[edges[j].first], d = pos[edges[j].second];
        if (c == a || c == b || d == a || d == b) continue;
        crossing = (a < c && c < b) != (a < d && d < b);
      }
    }
    if (!crossing) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

}  // namespace oracle
