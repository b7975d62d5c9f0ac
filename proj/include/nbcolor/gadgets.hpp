#pragma once

// Named lower-bound graphs with their claimed chromatic values.
//
// Adjacency is built from the structure used in each lower-bound argument
// (labels follow it: x0, y0, ..., t_i, ...). Embeddings are computed by the
// planarity test and validated by the Euler check; for the outerplanar
// gadgets every vertex lies on one face. Each claim is checked against the
// exact solver in the tests and the reproduction harness.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbcolor/graph.hpp"
#include "nbcolor/variants.hpp"

namespace nbcolor {

enum class Relation { Equal, AtMost };

struct Claim {
  VariantSpec variant;
  Relation relation = Relation::Equal;
  int value = 0;
  std::string claim;  // what the value certifies
};

struct Gadget {
  std::string name;
  Graph graph;
  std::optional<PlaneEmbedding> embedding;
  std::vector<std::string> labels;  // per vertex

  /// Index of the vertex with the given label.
  Vertex vertex(std::string_view label) const {
    for (Vertex v = 0; v < labels.size(); ++v)
      if (labels[v] == label) return v;
    throw Error(ErrorCode::MalformedInput, "no vertex labeled " + std::string(label));
  }
};

namespace detail {

class GadgetBuilder {
 public:
  Vertex v(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    const Vertex id = g_.add_vertex();
    ids_.emplace(label, id);
    labels_.push_back(label);
    return id;
  }
  void e(const std::string& a, const std::string& b) {
    const Vertex x = v(a), y = v(b);  // fixed creation order
    g_.add_edge(x, y);
  }
  void path(const std::vector<std::string>& ls) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) e(ls[i], ls[i + 1]);
  }
  void cycle(const std::vector<std::string>& ls) {
    path(ls);
    e(ls.back(), ls.front());
  }
  /// Vertex `ear` adjacent to exactly a and b.
  void ear(const std::string& ear, const std::string& a, const std::string& b) {
    e(ear, a);
    e(ear, b);
  }

  Gadget finish(std::string name, bool outerplane) && {
    Gadget out{std::move(name), std::move(g_), std::nullopt, std::move(labels_)};
    out.embedding = outerplane ? find_outerplane_embedding(out.graph) : find_plane_embedding(out.graph);
    if (!out.embedding) throw std::logic_error("gadget " + out.name + " is not planar");
    return out;
  }

 private:
  Graph g_;
  std::map<std::string, Vertex> ids_;
  std::vector<std::string> labels_;
};

inline std::string label(std::string_view stem, int i) { return std::string(stem) + std::to_string(i); }

// Hub triangle x0 y0 z0 with a 2-vertex on each side: x1 on x0y0, y1 on y0z0,
// z1 on z0x0. Each hub sees all vertices of `cycles` disjoint 5-cycles.
inline Gadget hub_triangle(std::string name, int cycles) {
  GadgetBuilder b;
  b.cycle({"x0", "y0", "z0"});
  b.ear("x1", "x0", "y0");
  b.ear("y1", "y0", "z0");
  b.ear("z1", "z0", "x0");
  int t = 0;
  for (const char* hub : {"x0", "y0", "z0"})
    for (int c = 0; c < cycles; ++c) {
      std::vector<std::string> cyc;
      for (int i = 0; i < 5; ++i) cyc.push_back(label("t", ++t));
      b.cycle(cyc);
      for (const auto& s : cyc) b.e(hub, s);
    }
  return std::move(b).finish(std::move(name), false);
}

inline Gadget make_g3() { return hub_triangle("G3", 1); }
inline Gadget make_g3prime() { return hub_triangle("G3prime", 2); }

// Two triangles sharing x0, each with a 2-vertex on every side.
// First: x0 y0 z0 with x1 on y0z0, y1 on x0z0, z1 on x0y0.
// Second: x0 y2 z2 with x3 on y2z2, y3 on x0z2, z3 on x0y2.
inline Gadget make_o_iumo() {
  GadgetBuilder b;
  b.cycle({"x0", "y0", "z0"});
  b.ear("x1", "y0", "z0");
  b.ear("y1", "x0", "z0");
  b.ear("z1", "x0", "y0");
  b.cycle({"x0", "y2", "z2"});
  b.ear("x3", "y2", "z2");
  b.ear("y3", "x0", "z2");
  b.ear("z3", "x0", "y2");
  return std::move(b).finish("O_iUMo", true);
}

// Two copies of K4 sharing x0 (x0 y0 w0 z0 and x0 y1 w1 z1), with a
// 2-vertex t_i on each of the twelve K4 edges.
inline Gadget make_h_iumo() {
  GadgetBuilder b;
  int t = 0;
  for (int copy = 0; copy < 2; ++copy) {
    const std::vector<std::string> q = {"x0", label("y", copy), label("w", copy), label("z", copy)};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) b.e(q[i], q[j]);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) b.ear(label("t", ++t), q[i], q[j]);
  }
  return std::move(b).finish("H_iUMo", false);
}

// Copy of H: x0 inside the triangle a b c, plus y_i inside face x0 of the
// two triangle vertices other than the i-th. Four copies share the five
// identified triangle vertices so that each belongs to exactly two copies.
inline Gadget make_h_pcfo() {
  GadgetBuilder b;
  const std::vector<std::vector<std::string>> triangles = {
      {"xAB", "xAC", "xAD"}, {"xAB", "xBC", "xBD"}, {"xAC", "xBC", "xC"}, {"xAD", "xBD", "xD"}};
  const char* copy_name[] = {"A", "B", "C", "D"};
  for (std::size_t q = 0; q < triangles.size(); ++q) {
    const std::string x0 = std::string("x0") + copy_name[q];
    const auto& t = triangles[q];
    b.cycle(t);
    for (const auto& s : t) b.e(x0, s);
    for (int i = 0; i < 3; ++i) {
      const std::string y = "y" + std::to_string(i + 1) + copy_name[q];
      b.e(y, x0);
      b.e(y, t[(i + 1) % 3]);
      b.e(y, t[(i + 2) % 3]);
    }
  }
  return std::move(b).finish("H_pCFo", false);
}

// Plane triangulation on nine vertices, degrees five (x1..x6) and four
// (x7, x8, x9).
inline Gadget make_fritsch() {
  GadgetBuilder b;
  for (int i = 1; i <= 9; ++i) b.v(label("x", i));
  const int edges[][2] = {{1, 2}, {1, 3}, {1, 7}, {1, 4}, {1, 8}, {2, 3}, {2, 9}, {2, 5}, {2, 8}, {3, 9}, {3, 6},
                          {3, 7}, {4, 7}, {4, 6}, {4, 5}, {4, 8}, {5, 9}, {5, 6}, {5, 8}, {6, 9}, {6, 7}};
  for (auto [u, w] : edges) b.e(label("x", u), label("x", w));
  return std::move(b).finish("fritsch", false);
}

// Outer cycle x0 x1..x6 y0 y1..y6 z0 z1..z6 with the hubs x0 y0 z0 forming
// a triangle; each hub is adjacent to its six path vertices.
inline Gadget make_o_pumc() {
  GadgetBuilder b;
  const char* hubs[] = {"x", "y", "z"};
  for (int h = 0; h < 3; ++h) {
    const std::string hub = label(hubs[h], 0), next = label(hubs[(h + 1) % 3], 0);
    std::vector<std::string> p = {hub};
    for (int i = 1; i <= 6; ++i) p.push_back(label(hubs[h], i));
    p.push_back(next);
    b.path(p);
    for (int i = 2; i <= 7; ++i) b.e(hub, p[i]);
  }
  return std::move(b).finish("O_pUMc", true);
}

/// Orientation of K4 used for H_pUMo: every base vertex has positive in- and
/// outdegree.
inline constexpr int kPumoArcs[6][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}};

// Each arc x -> z of the oriented K4 becomes a copy of H: x adjacent to
// y1..y6 and z, with triangles y1y2y3, y3y4y5 and y5y6z.
inline Gadget make_h_pumo() {
  GadgetBuilder b;
  for (int i = 1; i <= 4; ++i) b.v(label("x", i));
  for (int a = 0; a < 6; ++a) {
    const std::string x = label("x", kPumoArcs[a][0]), z = label("x", kPumoArcs[a][1]);
    const std::string tag = "_" + std::to_string(kPumoArcs[a][0]) + std::to_string(kPumoArcs[a][1]);
    auto y = [&](int i) { return "y" + std::to_string(i) + tag; };
    b.e(x, z);
    for (int i = 1; i <= 6; ++i) b.e(x, y(i));
    b.cycle({y(1), y(2), y(3)});
    b.cycle({y(3), y(4), y(5)});
    b.cycle({y(5), y(6), z});
  }
  return std::move(b).finish("H_pUMo", false);
}

inline Gadget make_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::UnknownGadget, "C_n needs n >= 3");
  GadgetBuilder b;
  std::vector<std::string> ls;
  for (int i = 1; i <= n; ++i) ls.push_back(label("c", i));
  b.cycle(ls);
  return std::move(b).finish("C_n(" + std::to_string(n) + ")", true);
}

/// n for "C_n(n)", "Cn" or "C<n>".
inline std::optional<int> cycle_length(std::string_view name) {
  std::string_view digits;
  if (name.starts_with("C_n(") && name.ends_with(")"))
    digits = name.substr(4, name.size() - 5);
  else if (name.size() > 1 && name[0] == 'C')
    digits = name.substr(1);
  else
    return std::nullopt;
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  int n = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + (c - '0');
  }
  return n;
}

}  // namespace detail

/// The fixed gadget names; cycles are requested as "C_n(5)" or "C5".
inline const std::vector<std::string>& gadget_names() {
  static const std::vector<std::string> names = {"G3",     "G3prime", "O_iUMo", "H_iUMo",
                                                 "H_pCFo", "fritsch", "O_pUMc", "H_pUMo"};
  return names;
}

inline Gadget generate(std::string_view name) {
  if (name == "G3") return detail::make_g3();
  if (name == "G3prime") return detail::make_g3prime();
  if (name == "O_iUMo") return detail::make_o_iumo();
  if (name == "H_iUMo") return detail::make_h_iumo();
  if (name == "H_pCFo") return detail::make_h_pcfo();
  if (name == "fritsch") return detail::make_fritsch();
  if (name == "O_pUMc") return detail::make_o_pumc();
  if (name == "H_pUMo") return detail::make_h_pumo();
  if (auto n = detail::cycle_length(name)) return detail::make_cycle(*n);
  throw Error(ErrorCode::UnknownGadget, "unknown gadget '" + std::string(name) + "'");
}

inline std::vector<Claim> claimed_values(std::string_view name) {
  using R = Relation;
  if (name == "G3") return {{variant::iCFc, R::Equal, 3, "planar iCFc needs 3"}};
  if (name == "G3prime") return {{variant::iUMc, R::Equal, 4, "planar iUMc needs 4"}};
  if (name == "O_iUMo") return {{variant::iUMo, R::Equal, 4, "outerplanar iUMo needs 4"}};
  if (name == "H_iUMo") return {{variant::iUMo, R::Equal, 5, "planar iUMo needs 5"}};
  if (name == "H_pCFo") return {{variant::pCFo, R::Equal, 6, "planar pCFo needs 6"}};
  if (name == "fritsch") return {{variant::pUMo, R::Equal, 6, "planar pUMo needs 6"}};
  if (name == "O_pUMc") return {{variant::pUMc, R::Equal, 5, "outerplanar pUMc needs 5"}};
  if (name == "H_pUMo") return {{variant::pUMc, R::Equal, 6, "planar pUMc needs 6"}};
  if (auto n = detail::cycle_length(name)) {
    if (*n < 3) throw Error(ErrorCode::UnknownGadget, "C_n needs n >= 3");
    // The bound 5 is reached only by C5.
    if (*n == 5) return {{variant::pCFo, R::Equal, 5, "cycles: pCFo bound 5 reached"}};
    return {{variant::pCFo, R::AtMost, 4, "cycles: pCFo below 5 unless n = 5"}};
  }
  throw Error(ErrorCode::UnknownGadget, "unknown gadget '" + std::string(name) + "'");
}

}  // namespace nbcolor
