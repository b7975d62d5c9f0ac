#pragma once

// Constructive colorings: greedy first-fit, the facial subroutines, the
// closure-based pipelines for planar graphs and the recursive reduction
// algorithm for proper open unique-maximum coloring of outerplanar graphs.
//
// The four-color and facial-UM steps are done by exact search; the theorems
// behind them guarantee a witness, so a failed search throws BoundViolated.

#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbcolor/closure.hpp"
#include "nbcolor/coloring.hpp"
#include "nbcolor/exact.hpp"
#include "nbcolor/graph.hpp"
#include "nbcolor/variants.hpp"

namespace nbcolor {

/// Lowest admissible color for each vertex in `order` (identity by default).
inline Coloring greedy_first_fit(const Graph& g, std::span<const Vertex> order = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> seq(order.begin(), order.end());
  if (seq.empty()) {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : seq) {
    if (v >= n || seen[v]) throw Error(ErrorCode::MalformedInput, "greedy order must be a permutation of the vertices");
    seen[v] = 1;
  }
  if (seq.size() != n) throw Error(ErrorCode::MalformedInput, "greedy order must be a permutation of the vertices");
  std::vector<int> colors(n, 0);
  std::vector<char> used;
  for (Vertex v : seq) {
    used.assign(g.degree(v) + 2, 0);
    for (Vertex u : g.neighbors(v))
      if (colors[u] > 0 && static_cast<std::size_t>(colors[u]) < used.size()) used[colors[u]] = 1;
    int c = 1;
    while (used[c]) ++c;
    colors[v] = c;
  }
  return Coloring(std::move(colors));
}

struct Partition {
  std::vector<Vertex> V1;
  std::vector<Vertex> V2;
};

/// V1 = vertices of color `cls`, V2 = the rest.
inline Partition partition_by_class(const Coloring& c, int cls) {
  Partition p;
  for (Vertex v = 0; v < c.size(); ++v) (c[v] == cls ? p.V1 : p.V2).push_back(v);
  return p;
}

/// Proper coloring with at most 4 colors in which class 4 is independent and
/// dominating (inclusion-maximal).
inline Coloring dominating_four_coloring(const PlaneEmbedding& e, const SolveOptions& opts = {}) {
  const Graph& g = e.graph();
  auto w = find_coloring(proper_problem(g), 4, opts);
  if (!w) throw Error(ErrorCode::BoundViolated, "no proper 4-coloring of a plane graph");
  std::vector<int> colors = w->colors;
  // Class 4 only grows, so one ascending pass reaches a fixed point.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (colors[v] == 4) continue;
    bool dominated = false;
    for (Vertex u : g.neighbors(v)) dominated = dominated || colors[u] == 4;
    if (!dominated) colors[v] = 4;
  }
  return Coloring(std::move(colors), 4);
}

namespace detail {

inline Coloring to_palette(const Coloring& ranks, Palette palette) {
  std::vector<int> out(ranks.size());
  for (Vertex v = 0; v < ranks.size(); ++v) out[v] = palette.color(ranks[v]);
  return Coloring(std::move(out), palette.last());
}

inline void require_palette(Palette palette, int size, const char* what) {
  if (palette.size != size || palette.first < 1)
    throw Error(ErrorCode::MalformedInput, std::string(what) + " needs " + std::to_string(size) + " consecutive colors");
}

}  // namespace detail

/// zeta[f] is the designated vertex of face f (an index into e.faces()).
using UniqueVertexChoice = std::vector<Vertex>;

/// Proper facial CF coloring with 4 colors. G plus an edge from zeta(f) to
/// every other vertex of f is still plane, and any proper coloring of it
/// makes zeta(f) unique on f. zeta defaults to the lowest vertex of each face.
inline Coloring facial_cf_coloring(const PlaneEmbedding& e, const std::optional<UniqueVertexChoice>& zeta = std::nullopt,
                                   Palette palette = {1, 4}, const SolveOptions& opts = {}) {
  detail::require_palette(palette, 4, "facial CF coloring");
  const auto& faces = e.faces();
  if (zeta && zeta->size() != faces.size())
    throw Error(ErrorCode::MalformedInput, "zeta must choose one vertex per face");
  Graph augmented = e.graph();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Vertex z = zeta ? (*zeta)[f] : faces[f].vertices.front();
    if (!std::binary_search(faces[f].vertices.begin(), faces[f].vertices.end(), z))
      throw Error(ErrorCode::MalformedInput, "zeta(f) must be incident with f");
    for (Vertex w : faces[f].vertices)
      if (w != z) augmented.add_edge(z, w);
  }
  std::optional<Coloring> ranks;
  try {
    ranks = find_coloring(proper_problem(augmented), 4, opts);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::Timeout || zeta) throw;
    ranks = find_coloring(problem_for(e, variant::facialCF), 4, opts);  // no zeta to honor
  }
  if (!ranks) throw Error(ErrorCode::BoundViolated, "no facial CF coloring with 4 colors on a plane graph");
  return detail::to_palette(*ranks, palette);
}

/// Proper facial UM coloring with 5 colors; ranks map to the palette in order.
inline Coloring facial_um_coloring(const PlaneEmbedding& e, Palette palette = {1, 5}, const SolveOptions& opts = {}) {
  detail::require_palette(palette, 5, "facial UM coloring");
  auto ranks = find_coloring(problem_for(e, variant::facialUM), 5, opts);
  if (!ranks) throw Error(ErrorCode::BoundViolated, "no facial UM coloring with 5 colors on a plane graph");
  return detail::to_palette(*ranks, palette);
}

/// Proper coloring of the closure graph in which every constraint set of
/// size >= 2 satisfies `rule`. Colors are palette colors, ids closure ids.
inline Coloring constrained_facial_coloring(const ClosureResult& closure, Rule rule, Palette palette,
                                            const SolveOptions& opts = {}) {
  ColoringProblem p;
  p.vertex_count = closure.graph.vertex_count();
  p.distinct = closure.graph.edges();
  p.rule = rule;
  p.palette_symmetric = rule == Rule::ConflictFree;
  std::vector<std::vector<Vertex>> groups;
  for (const auto& cs : closure.constraint_sets) groups.push_back(cs.members);
  detail::add_groups(p, std::move(groups));
  p.order = degree_order(closure.graph);
  auto ranks = find_coloring(p, palette.size, opts);
  if (!ranks)
    throw Error(ErrorCode::BoundViolated, "closure constraints not satisfiable with " + std::to_string(palette.size) +
                                              " colors");
  return detail::to_palette(*ranks, palette);
}

namespace detail {

inline void require_no_isolated(const Graph& g) {
  if (auto iso = g.first_isolated_vertex())
    throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(*iso + 1) + " has an empty open neighborhood");
}

inline void require_valid(const Graph& g, const Coloring& c, VariantSpec spec) {
  if (auto bad = check(g, c, spec))
    throw std::logic_error("pipeline output fails " + spec.name() + " at vertex " + std::to_string(bad->id + 1));
}

/// Colors the survivors of Phi_G(X) and writes them into `colors`.
inline void color_closure(const PlaneEmbedding& e, std::span<const Vertex> X, Rule rule, Palette palette,
                          const SolveOptions& opts, std::vector<int>& colors) {
  ClosureResult cl = facial_closure(e, X);
  Coloring alpha = constrained_facial_coloring(cl, rule, palette, opts);
  for (Vertex i = 0; i < cl.to_parent.size(); ++i) colors[cl.to_parent[i]] = alpha[i];
}

}  // namespace detail

/// iUMc coloring with at most 6 colors: V2 gets color 1, V1 is colored from
/// {2..6} under the UM constraints of Phi_G(V2).
inline Coloring color_iumc(const PlaneEmbedding& e, const SolveOptions& opts = {}) {
  const Graph& g = e.graph();
  Partition part = partition_by_class(greedy_first_fit(g), 1);
  std::vector<int> colors(g.vertex_count(), 1);
  detail::color_closure(e, part.V2, Rule::UniqueMaximum, {2, 5}, opts, colors);
  Coloring out(std::move(colors));
  detail::require_valid(g, out, variant::iUMc);
  return out;
}

/// pCFo coloring with at most 8 colors: V2 from {1..4} via Phi_G(V1), V1 from
/// {5..8} via Phi_G(V2).
inline Coloring color_pcfo(const PlaneEmbedding& e, const SolveOptions& opts = {}) {
  const Graph& g = e.graph();
  detail::require_no_isolated(g);
  Partition part = partition_by_class(greedy_first_fit(g), 1);
  std::vector<int> colors(g.vertex_count(), 0);
  detail::color_closure(e, part.V1, Rule::ConflictFree, {1, 4}, opts, colors);
  detail::color_closure(e, part.V2, Rule::ConflictFree, {5, 4}, opts, colors);
  Coloring out(std::move(colors));
  detail::require_valid(g, out, variant::pCFo);
  return out;
}

/// pUMo coloring with at most 10 colors; same scheme with UM and palettes
/// {1..5}, {6..10}.
inline Coloring color_pumo(const PlaneEmbedding& e, const SolveOptions& opts = {}) {
  const Graph& g = e.graph();
  detail::require_no_isolated(g);
  Partition part = partition_by_class(greedy_first_fit(g), 1);
  std::vector<int> colors(g.vertex_count(), 0);
  detail::color_closure(e, part.V1, Rule::UniqueMaximum, {1, 5}, opts, colors);
  detail::color_closure(e, part.V2, Rule::UniqueMaximum, {6, 5}, opts, colors);
  Coloring out(std::move(colors));
  detail::require_valid(g, out, variant::pUMo);
  return out;
}

/// pUMc coloring with at most 8 colors: a 4-coloring whose class 4 dominates;
/// class 4 is recolored from {4..8} via Phi_G(V2), the rest keep 1..3.
inline Coloring color_pumc(const PlaneEmbedding& e, const SolveOptions& opts = {}) {
  const Graph& g = e.graph();
  Coloring base = dominating_four_coloring(e, opts);
  Partition part = partition_by_class(base, 4);
  std::vector<int> colors = base.colors;
  detail::color_closure(e, part.V2, Rule::UniqueMaximum, {4, 5}, opts, colors);
  Coloring out(std::move(colors));
  detail::require_valid(g, out, variant::pUMc);
  return out;
}

/// Lowest 2-vertex v whose neighbors v1 < v2 are adjacent.
inline std::optional<std::array<Vertex, 3>> find_triangle_two_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto& nb = g.neighbors(v);
    if (g.has_edge(nb[0], nb[1])) return std::array<Vertex, 3>{v, nb[0], nb[1]};
  }
  return std::nullopt;
}

namespace detail {

/// Smallest color in 1..5 outside `avoid`; asserts the available slack.
inline int pick_color(std::span<const std::optional<int>> avoid, int slack) {
  std::array<char, 6> banned{};
  for (const auto& c : avoid)
    if (c && *c >= 1 && *c <= 5) banned[*c] = 1;
  int free = 0, first = 0;
  for (int c = 1; c <= 5; ++c)
    if (!banned[c]) {
      ++free;
      if (!first) first = c;
    }
  if (free < slack)
    throw std::logic_error("outerplanar extension has " + std::to_string(free) + " free colors, expected " +
                           std::to_string(slack));
  return first;
}

/// mu(v) in the graph at hand; vacuous for a vertex without neighbors.
inline std::optional<int> mu_or_vacuous(const Graph& g, const std::vector<int>& colors, Vertex v) {
  if (g.degree(v) == 0) return std::nullopt;
  std::vector<int> cs;
  for (Vertex u : g.neighbors(v)) cs.push_back(colors[u]);
  auto m = unique_maximum(cs);
  if (!m) throw std::logic_error("reduced coloring is not unique-maximum at a non-isolated vertex");
  return m;
}

// Relaxed semantics: vertices without neighbors need no unique maximum.
inline std::vector<int> outerplanar_recursive(const Graph& g, std::size_t depth) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  if (depth > 4 * n + 64) throw std::logic_error("outerplanar recursion does not terminate");

  auto reduce = [&](std::span<const Vertex> removed, auto&& extend) {
    std::vector<char> gone(n, 0);
    for (Vertex v : removed) gone[v] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v]) keep.push_back(v);
    Graph h = g.induced(keep);
    auto sub = outerplanar_recursive(h, depth + 1);
    std::vector<int> colors(n, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) colors[keep[i]] = sub[i];
    // mu values are taken in the reduced graph h
    auto mu = [&](Vertex v) -> std::optional<int> {
      auto idx = static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), v) - keep.begin());
      return mu_or_vacuous(h, sub, idx);
    };
    extend(colors, mu);
    return colors;
  };

  // R0: a component with at most two vertices
  const auto label = g.component_labels();
  std::vector<std::size_t> size(n, 0);
  for (Vertex v = 0; v < n; ++v) ++size[label[v]];
  for (Vertex v = 0; v < n; ++v) {
    if (size[label[v]] > 2) continue;
    std::vector<Vertex> comp{v};
    if (g.degree(v) == 1) comp.push_back(g.neighbors(v)[0]);
    return reduce(comp, [&](std::vector<int>& colors, auto&&) {
      colors[comp[0]] = 1;
      if (comp.size() == 2) colors[comp[1]] = 2;
    });
  }

  // R1: a 1-vertex
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    const Vertex v1 = g.neighbors(v)[0];
    const Vertex removed[] = {v};
    return reduce(removed, [&](std::vector<int>& colors, auto&& mu) {
      const std::optional<int> avoid[] = {colors[v1], mu(v1)};
      colors[v] = pick_color(avoid, 3);
    });
  }

  // R2: adjacent 2-vertices v, w with outer neighbors v1, w1
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) != 2) continue;
      const Vertex v1 = g.neighbors(v)[0] == w ? g.neighbors(v)[1] : g.neighbors(v)[0];
      const Vertex w1 = g.neighbors(w)[0] == v ? g.neighbors(w)[1] : g.neighbors(w)[0];
      const Vertex removed[] = {v, w};
      return reduce(removed, [&](std::vector<int>& colors, auto&& mu) {
        const std::optional<int> avoid_v[] = {colors[v1], mu(v1), colors[w1]};
        colors[v] = pick_color(avoid_v, 2);
        const std::optional<int> avoid_w[] = {colors[v], colors[v1], colors[w1], mu(w1)};
        colors[w] = pick_color(avoid_w, 1);
      });
    }
  }

  // R3: a 2-vertex on a triangle
  if (auto t = find_triangle_two_vertex(g)) {
    const auto [v, v1, v2] = *t;
    const Vertex removed[] = {v};
    return reduce(removed, [&](std::vector<int>& colors, auto&& mu) {
      const std::optional<int> avoid[] = {colors[v1], colors[v2], mu(v1), mu(v2)};
      colors[v] = pick_color(avoid, 1);
    });
  }
  throw Error(ErrorCode::StructureError, "no reduction applies; the graph is not outerplanar");
}

}  // namespace detail

/// pUMo coloring of an outerplanar graph with at most 5 colors. Inputs up to
/// kOuterplanarSizeLimit vertices are checked for outerplanarity first unless
/// `verify_outerplanar` is false; larger inputs are trusted.
inline Coloring color_pumo_outerplanar(const Graph& g, bool verify_outerplanar = true) {
  detail::require_no_isolated(g);
  if (verify_outerplanar && g.vertex_count() <= kOuterplanarSizeLimit && !is_outerplanar(g))
    throw Error(ErrorCode::StructureError, "input graph is not outerplanar");
  Coloring out(detail::outerplanar_recursive(g, 0));
  detail::require_valid(g, out, variant::pUMo);
  return out;
}

}  // namespace nbcolor
