#pragma once

// Simple graphs, rotation systems, face tracing and the elementary
// transformations (vertex deletion, subdivision, outerplanarity).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "nbcolor/error.hpp"

namespace nbcolor {

/// 0-based vertex index. File formats and the CLI use 1-based labels.
using Vertex = std::uint32_t;
/// Undirected edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;
/// Directed edge (tail, head) of a rotation system.
using Dart = std::pair<Vertex, Vertex>;
/// Rotation system: clockwise cyclic neighbor order per vertex.
using RotationSystem = std::vector<std::vector<Vertex>>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Sorted open neighborhood N(v).
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

  /// Sorted closed neighborhood N[v].
  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    std::vector<Vertex> out = adj_.at(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Adds uv; returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= adj_.size() || v >= adj_.size())
      throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u + 1));
    if (has_edge(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
    return true;
  }

  /// Vertex appended with the next free index.
  Vertex add_vertex() {
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
  }

  /// All edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::optional<Vertex> first_isolated_vertex() const {
    for (Vertex v = 0; v < adj_.size(); ++v)
      if (adj_[v].empty()) return v;
    return std::nullopt;
  }

  /// Component label per vertex, labels numbered in order of lowest member.
  std::vector<std::size_t> component_labels() const {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(adj_.size(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < adj_.size(); ++s) {
      if (label[s] != unset) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[u])
          if (label[w] == unset) {
            label[w] = next;
            stack.push_back(w);
          }
      }
      ++next;
    }
    return label;
  }

  std::size_t component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  }

  bool is_connected() const { return component_count() <= 1; }

  /// Subgraph induced by `keep` (any order); vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<std::int64_t> index(adj_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<std::int64_t>(i);
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (Vertex w : adj_[keep[i]])
        if (index[w] > static_cast<std::int64_t>(i)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// One face: its boundary walk and the set of distinct incident vertices.
struct Face {
  std::vector<Dart> walk;
  std::vector<Vertex> vertices;  // sorted, distinct
};

namespace detail {

inline std::size_t position_in(const std::vector<Vertex>& cycle, Vertex x) {
  auto it = std::find(cycle.begin(), cycle.end(), x);
  if (it == cycle.end()) throw Error(ErrorCode::InconsistentRotation, "rotation is not symmetric");
  return static_cast<std::size_t>(it - cycle.begin());
}

/// Throws InconsistentRotation unless rot is a symmetric simple rotation system.
inline void validate_rotation(const RotationSystem& rot) {
  const std::size_t n = rot.size();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::InconsistentRotation, "repeated neighbor at vertex " + std::to_string(v + 1));
    for (Vertex u : rot[v]) {
      if (u >= n) throw Error(ErrorCode::MalformedInput, "rotation entry out of range");
      if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(v + 1));
      if (std::find(rot[u].begin(), rot[u].end(), v) == rot[u].end())
        throw Error(ErrorCode::InconsistentRotation,
                    "vertex " + std::to_string(u + 1) + " does not list " + std::to_string(v + 1));
    }
  }
}

}  // namespace detail

/// Traces the faces of a (symmetric) rotation system. After dart (u->v) the
/// walk continues with (v->w), w the successor of u in the rotation at v.
/// Faces are emitted lowest unvisited dart first; an isolated vertex forms a
/// face with an empty walk.
inline std::vector<Face> trace_faces(const RotationSystem& rot) {
  const std::size_t n = rot.size();
  std::vector<std::vector<char>> seen(n);
  // back[u][i]: index of u inside rot[rot[u][i]]
  std::vector<std::vector<std::size_t>> back(n);
  for (Vertex u = 0; u < n; ++u) {
    seen[u].assign(rot[u].size(), 0);
    back[u].resize(rot[u].size());
    for (std::size_t i = 0; i < rot[u].size(); ++i) back[u][i] = detail::position_in(rot[rot[u][i]], u);
  }
  std::vector<Face> faces;
  for (Vertex u = 0; u < n; ++u) {
    if (rot[u].empty()) {
      faces.push_back(Face{{}, {u}});
      continue;
    }
    std::vector<std::size_t> by_head(rot[u].size());
    std::iota(by_head.begin(), by_head.end(), 0);
    std::sort(by_head.begin(), by_head.end(), [&](std::size_t a, std::size_t b) { return rot[u][a] < rot[u][b]; });
    for (std::size_t start : by_head) {
      if (seen[u][start]) continue;
      Face face;
      Vertex tail = u;
      std::size_t idx = start;
      while (!seen[tail][idx]) {
        seen[tail][idx] = 1;
        Vertex head = rot[tail][idx];
        face.walk.emplace_back(tail, head);
        face.vertices.push_back(tail);
        const std::size_t at_head = back[tail][idx];
        idx = (at_head + 1) % rot[head].size();
        tail = head;
      }
      std::sort(face.vertices.begin(), face.vertices.end());
      face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

inline Graph graph_of(const RotationSystem& rot) {
  detail::validate_rotation(rot);
  Graph g(rot.size());
  for (Vertex v = 0; v < rot.size(); ++v)
    for (Vertex u : rot[v]) g.add_edge(v, u);
  return g;
}

/// Genus-zero test per component: n - m + f_traced == 2c.
inline bool is_genus_zero(const RotationSystem& rot) {
  Graph g = graph_of(rot);
  const auto f = static_cast<std::int64_t>(trace_faces(rot).size());
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const auto c = static_cast<std::int64_t>(g.component_count());
  return n - m + f == 2 * c;
}

/// A graph together with a validated genus-zero rotation system.
class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;

  /// Validates the rotation; throws InconsistentRotation or NotPlane.
  static PlaneEmbedding from_rotation(RotationSystem rot, std::optional<std::size_t> outer_face = std::nullopt) {
    PlaneEmbedding e;
    e.graph_ = graph_of(rot);
    e.faces_ = trace_faces(rot);
    e.rotation_ = std::move(rot);
    const auto n = static_cast<std::int64_t>(e.graph_.vertex_count());
    const auto m = static_cast<std::int64_t>(e.graph_.edge_count());
    const auto f = static_cast<std::int64_t>(e.faces_.size());
    const auto c = static_cast<std::int64_t>(e.graph_.component_count());
    if (n - m + f != 2 * c)
      throw Error(ErrorCode::NotPlane, "Euler check failed: n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                           " f=" + std::to_string(f) + " c=" + std::to_string(c));
    if (outer_face && *outer_face >= e.faces_.size())
      throw Error(ErrorCode::MalformedInput, "outer face hint out of range");
    e.outer_face_ = outer_face;
    return e;
  }

  const Graph& graph() const noexcept { return graph_; }
  const RotationSystem& rotation() const noexcept { return rotation_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::optional<std::size_t> outer_face_hint() const noexcept { return outer_face_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

  friend bool operator==(const PlaneEmbedding& a, const PlaneEmbedding& b) { return a.rotation_ == b.rotation_; }

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Face> faces_;
  std::optional<std::size_t> outer_face_;
};

/// Result of deleting vertices: the induced embedding and, for each of its
/// vertices, the index it had in the parent.
struct SubEmbedding {
  PlaneEmbedding embedding;
  std::vector<Vertex> to_parent;
};

/// Induced embedding on V \ S with rotations restricted to survivors.
inline SubEmbedding delete_vertices(const PlaneEmbedding& e, std::span<const Vertex> removed) {
  const std::size_t n = e.vertex_count();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (v >= n) throw Error(ErrorCode::MalformedInput, "vertex out of range");
    gone[v] = 1;
  }
  std::vector<std::int64_t> index(n, -1);
  SubEmbedding out;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) {
      index[v] = static_cast<std::int64_t>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  RotationSystem rot(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex u : e.rotation()[out.to_parent[i]])
      if (!gone[u]) rot[i].push_back(static_cast<Vertex>(index[u]));
  out.embedding = PlaneEmbedding::from_rotation(std::move(rot));
  return out;
}

/// Subdivides every edge once. The vertex on the i-th edge of G.edges()
/// gets index |V| + i.
inline Graph subdivide(const Graph& g) {
  const auto edges = g.edges();
  Graph s(g.vertex_count() + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto mid = static_cast<Vertex>(g.vertex_count() + i);
    s.add_edge(edges[i].first, mid);
    s.add_edge(mid, edges[i].second);
  }
  return s;
}

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph b(g.vertex_count());
  int index = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, ok] = boost::add_edge(u, v, b);
    (void)ok;
    boost::put(boost::edge_index, b, e, index++);
  }
  return b;
}

}  // namespace detail

/// Planarity test (Boyer-Myrvold); returns a plane embedding when G is planar.
inline std::optional<PlaneEmbedding> find_plane_embedding(const Graph& g) {
  using detail::BoostGraph;
  BoostGraph b = detail::to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(g.vertex_count());
  auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, b));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;
  RotationSystem rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const EdgeDesc& e : storage[v]) {
      auto s = static_cast<Vertex>(boost::source(e, b));
      auto t = static_cast<Vertex>(boost::target(e, b));
      rot[v].push_back(s == v ? t : s);
    }
  return PlaneEmbedding::from_rotation(std::move(rot));
}

inline bool is_planar(const Graph& g) {
  detail::BoostGraph b = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

inline constexpr std::size_t kOuterplanarSizeLimit = 30;

/// G is outerplanar iff G plus a vertex adjacent to every vertex is planar.
inline bool is_outerplanar(const Graph& g, std::size_t size_limit = kOuterplanarSizeLimit) {
  if (g.vertex_count() > size_limit)
    throw Error(ErrorCode::SizeLimit, "outerplanarity check limited to " + std::to_string(size_limit) + " vertices");
  Graph apex = g;
  const Vertex a = apex.add_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) apex.add_edge(v, a);
  return is_planar(apex);
}

/// Embedding of a (small) outerplanar graph in which every vertex lies on
/// one face: the apex vertex of the planarity witness is deleted again.
inline std::optional<PlaneEmbedding> find_outerplane_embedding(const Graph& g) {
  Graph apex = g;
  const Vertex a = apex.add_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) apex.add_edge(v, a);
  auto e = find_plane_embedding(apex);
  if (!e) return std::nullopt;
  const Vertex removed[] = {a};
  return delete_vertices(*e, removed).embedding;
}

}  // namespace nbcolor
