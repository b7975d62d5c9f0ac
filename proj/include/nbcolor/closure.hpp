#pragma once

// Facial closure of a plane graph with respect to a vertex set X.
//
// Every x in X is replaced by edges between the cyclically consecutive
// members of N(x) \ X (one edge when there are exactly two). The cyclic
// sequence itself is kept as a constraint set, because the constructive
// pipelines need "unique color on N(x) \ X" and should not depend on the
// embedding surgery succeeding.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nbcolor/graph.hpp"

namespace nbcolor {

/// N(x) \ X in the cyclic order around x. `members` uses closure ids.
struct ConstraintSet {
  Vertex x = 0;  // parent id of the removed vertex
  std::vector<Vertex> members;
};

struct ClosureResult {
  Graph graph;                     // on V \ X, renumbered in increasing order
  std::vector<Vertex> to_parent;   // closure id -> parent id
  std::vector<std::optional<Vertex>> from_parent;  // parent id -> closure id
  std::vector<ConstraintSet> constraint_sets;      // one per x in X, ascending x
  std::vector<Edge> added_edges;   // closure ids, lexicographic
  std::optional<PlaneEmbedding> derived_embedding;
  std::string diagnostic;          // why derived_embedding is missing, if it is
};

namespace detail {

inline std::vector<char> membership(std::size_t n, std::span<const Vertex> xs) {
  std::vector<char> in(n, 0);
  for (Vertex x : xs) {
    if (x >= n) throw Error(ErrorCode::XNotSubset, "vertex " + std::to_string(x + 1) + " is not in the graph");
    in[x] = 1;
  }
  return in;
}

}  // namespace detail

inline ClosureResult facial_closure(const PlaneEmbedding& e, std::span<const Vertex> X) {
  const std::size_t n = e.vertex_count();
  const auto in_x = detail::membership(n, X);
  const auto& rot = e.rotation();

  ClosureResult out;
  out.from_parent.assign(n, std::nullopt);
  for (Vertex v = 0; v < n; ++v)
    if (!in_x[v]) {
      out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  const std::size_t k = out.to_parent.size();
  out.graph = Graph(k);
  for (auto [u, v] : e.graph().edges())
    if (!in_x[u] && !in_x[v]) out.graph.add_edge(*out.from_parent[u], *out.from_parent[v]);

  // restricted[x]: rotation at x restricted to survivors, in closure ids
  std::vector<std::vector<Vertex>> restricted(n);
  for (Vertex x = 0; x < n; ++x) {
    if (!in_x[x]) continue;
    for (Vertex u : rot[x])
      if (!in_x[u]) restricted[x].push_back(*out.from_parent[u]);
    out.constraint_sets.push_back({x, restricted[x]});
  }

  std::set<Edge> added;
  auto link = [&](Vertex a, Vertex b) {
    if (out.graph.add_edge(a, b)) added.insert({std::min(a, b), std::max(a, b)});
  };
  for (const auto& cs : out.constraint_sets) {
    const auto& r = cs.members;
    if (r.size() == 2) link(r[0], r[1]);
    if (r.size() >= 3)
      for (std::size_t i = 0; i < r.size(); ++i) link(r[i], r[(i + 1) % r.size()]);
  }
  out.added_edges.assign(added.begin(), added.end());

  // Surgery: at survivor u, the dart towards x is replaced in place by the
  // darts to u's successor and predecessor around x. Entries carry the copy
  // of the edge they belong to, so parallel copies are dropped consistently
  // at both ends: the copy met first in the rotation of the lower endpoint
  // survives.
  struct Entry {
    Vertex to;
    std::int64_t copy;  // -1: edge of G; otherwise (x, slot) packed
  };
  std::vector<std::vector<Entry>> multi(k);
  for (Vertex i = 0; i < k; ++i) {
    const Vertex u = out.to_parent[i];
    for (Vertex w : rot[u]) {
      if (!in_x[w]) {
        multi[i].push_back({*out.from_parent[w], -1});
        continue;
      }
      const auto& r = restricted[w];
      if (r.size() < 2) continue;
      const std::size_t d = r.size();
      const std::size_t p = static_cast<std::size_t>(std::find(r.begin(), r.end(), i) - r.begin());
      const auto packed = [&](std::size_t slot) {
        return static_cast<std::int64_t>(w) * static_cast<std::int64_t>(n) + static_cast<std::int64_t>(slot);
      };
      // slot j is the edge r[j] r[j+1]; a 2-set has the single slot 0
      multi[i].push_back({r[(p + 1) % d], packed(d == 2 ? 0 : p)});
      if (d >= 3) multi[i].push_back({r[(p + d - 1) % d], packed((p + d - 1) % d)});
    }
  }
  std::map<Edge, std::int64_t> kept;
  for (Vertex i = 0; i < k; ++i)
    for (const Entry& en : multi[i])
      if (i < en.to) kept.emplace(Edge{i, en.to}, en.copy);
  RotationSystem new_rot(k);
  for (Vertex i = 0; i < k; ++i)
    for (const Entry& en : multi[i])
      if (kept.at(Edge{std::min(i, en.to), std::max(i, en.to)}) == en.copy) new_rot[i].push_back(en.to);
  try {
    auto emb = PlaneEmbedding::from_rotation(std::move(new_rot));
    if (emb.graph() == out.graph)
      out.derived_embedding = std::move(emb);
    else
      out.diagnostic = "surgery produced a different graph";
  } catch (const Error& err) {
    out.diagnostic = std::string("surgery failed: ") + err.what();
  }
  return out;
}

}  // namespace nbcolor
