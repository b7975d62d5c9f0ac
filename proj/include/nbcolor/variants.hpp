#pragma once

// Validity checkers for the neighborhood and facial coloring variants. These
// are the semantic ground truth the solvers and constructions are tested
// against, so they are written for clarity rather than speed.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nbcolor/coloring.hpp"
#include "nbcolor/graph.hpp"

namespace nbcolor {

enum class Properness { Proper, Improper };
enum class Rule { ConflictFree, UniqueMaximum };
enum class Scope { Open, Closed, Facial };

struct VariantSpec {
  Properness properness = Properness::Proper;
  Rule rule = Rule::ConflictFree;
  Scope scope = Scope::Open;

  bool proper() const noexcept { return properness == Properness::Proper; }

  /// Short name such as "pCFo", "iUMc" or "pUMf" (facial).
  std::string name() const {
    std::string s = proper() ? "p" : "i";
    s += rule == Rule::ConflictFree ? "CF" : "UM";
    s += scope == Scope::Open ? "o" : scope == Scope::Closed ? "c" : "f";
    return s;
  }

  friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

inline std::optional<VariantSpec> parse_variant(std::string_view name) {
  if (name.size() != 4) return std::nullopt;
  VariantSpec v;
  if (name[0] == 'p') v.properness = Properness::Proper;
  else if (name[0] == 'i') v.properness = Properness::Improper;
  else return std::nullopt;
  if (name.substr(1, 2) == "CF") v.rule = Rule::ConflictFree;
  else if (name.substr(1, 2) == "UM") v.rule = Rule::UniqueMaximum;
  else return std::nullopt;
  if (name[3] == 'o') v.scope = Scope::Open;
  else if (name[3] == 'c') v.scope = Scope::Closed;
  else if (name[3] == 'f') v.scope = Scope::Facial;
  else return std::nullopt;
  return v;
}

namespace variant {
inline constexpr VariantSpec iCFo{Properness::Improper, Rule::ConflictFree, Scope::Open};
inline constexpr VariantSpec iCFc{Properness::Improper, Rule::ConflictFree, Scope::Closed};
inline constexpr VariantSpec iUMo{Properness::Improper, Rule::UniqueMaximum, Scope::Open};
inline constexpr VariantSpec iUMc{Properness::Improper, Rule::UniqueMaximum, Scope::Closed};
inline constexpr VariantSpec pCFo{Properness::Proper, Rule::ConflictFree, Scope::Open};
inline constexpr VariantSpec pCFc{Properness::Proper, Rule::ConflictFree, Scope::Closed};
inline constexpr VariantSpec pUMo{Properness::Proper, Rule::UniqueMaximum, Scope::Open};
inline constexpr VariantSpec pUMc{Properness::Proper, Rule::UniqueMaximum, Scope::Closed};
inline constexpr VariantSpec facialCF{Properness::Proper, Rule::ConflictFree, Scope::Facial};
inline constexpr VariantSpec facialUM{Properness::Proper, Rule::UniqueMaximum, Scope::Facial};

inline constexpr VariantSpec neighborhood[] = {iCFo, iCFc, iUMo, iUMc, pCFo, pCFc, pUMo, pUMc};
}  // namespace variant

enum class ViolationReason { NotProper, NoUniqueColor, MaxNotUnique, IsolatedVertex };

constexpr std::string_view to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::NotProper: return "not-proper";
    case ViolationReason::NoUniqueColor: return "no-unique-color";
    case ViolationReason::MaxNotUnique: return "max-not-unique";
    case ViolationReason::IsolatedVertex: return "isolated-vertex";
  }
  return "?";
}

/// First failing vertex (or face, for the facial condition) of a check.
struct Violation {
  std::size_t id = 0;  // vertex index, or face index when on_face
  bool on_face = false;
  ViolationReason reason = ViolationReason::NotProper;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// nullopt means the coloring is valid.
using CheckResult = std::optional<Violation>;

/// Color occurring exactly once in `colors`, the smallest such; nullopt if none.
inline std::optional<int> unique_color(std::span<const int> colors) {
  std::map<int, int> count;
  for (int c : colors) ++count[c];
  for (auto [c, k] : count)
    if (k == 1) return c;
  return std::nullopt;
}

/// Maximum color when it occurs exactly once in `colors`.
inline std::optional<int> unique_maximum(std::span<const int> colors) {
  if (colors.empty()) return std::nullopt;
  int best = colors[0];
  int count = 0;
  for (int c : colors) {
    if (c > best) {
      best = c;
      count = 1;
    } else if (c == best) {
      ++count;
    }
  }
  return count == 1 ? std::optional<int>(best) : std::nullopt;
}

inline bool satisfies(Rule rule, std::span<const int> colors) {
  return rule == Rule::ConflictFree ? unique_color(colors).has_value() : unique_maximum(colors).has_value();
}

namespace detail {

inline void validate_coloring(const Graph& g, const Coloring& sigma) {
  if (sigma.size() != g.vertex_count())
    throw Error(ErrorCode::MalformedInput, "coloring must assign every vertex a color");
  for (int c : sigma.colors)
    if (c < 1 || (sigma.palette_size > 0 && c > sigma.palette_size))
      throw Error(ErrorCode::MalformedInput, "color " + std::to_string(c) + " outside the palette");
}

inline std::vector<int> colors_of(const Coloring& sigma, std::span<const Vertex> vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(sigma[v]);
  return out;
}

inline ViolationReason failure_reason(Rule rule) {
  return rule == Rule::ConflictFree ? ViolationReason::NoUniqueColor : ViolationReason::MaxNotUnique;
}

inline CheckResult check_properness(const Graph& g, const Coloring& sigma) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v))
      if (sigma[u] == sigma[v]) return Violation{v, false, ViolationReason::NotProper};
  return std::nullopt;
}

}  // namespace detail

/// Neighborhood variants on a bare graph; facial scope throws MissingEmbedding.
inline CheckResult check(const Graph& g, const Coloring& sigma, VariantSpec spec) {
  if (spec.scope == Scope::Facial) throw Error(ErrorCode::MissingEmbedding, "facial variants need a plane embedding");
  detail::validate_coloring(g, sigma);
  if (spec.scope == Scope::Open)
    if (auto iso = g.first_isolated_vertex())
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(*iso + 1) + " has an empty open neighborhood");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (spec.proper())
      for (Vertex u : g.neighbors(v))
        if (sigma[u] == sigma[v]) return Violation{v, false, ViolationReason::NotProper};
    auto hood = spec.scope == Scope::Open ? g.neighbors(v) : g.closed_neighborhood(v);
    if (!satisfies(spec.rule, detail::colors_of(sigma, hood))) return Violation{v, false, detail::failure_reason(spec.rule)};
  }
  return std::nullopt;
}

inline CheckResult check(const PlaneEmbedding& e, const Coloring& sigma, VariantSpec spec) {
  if (spec.scope != Scope::Facial) return check(e.graph(), sigma, spec);
  detail::validate_coloring(e.graph(), sigma);
  if (spec.proper())
    if (auto bad = detail::check_properness(e.graph(), sigma)) return bad;
  const auto& faces = e.faces();
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (!satisfies(spec.rule, detail::colors_of(sigma, faces[f].vertices)))
      return Violation{f, true, detail::failure_reason(spec.rule)};
  return std::nullopt;
}

inline bool is_valid(const Graph& g, const Coloring& sigma, VariantSpec spec) { return !check(g, sigma, spec); }
inline bool is_valid(const PlaneEmbedding& e, const Coloring& sigma, VariantSpec spec) { return !check(e, sigma, spec); }

/// mu(v): the maximum color of N(v) (open) or N[v] (closed) if it is unique.
inline std::optional<int> unique_max(const Graph& g, const Coloring& sigma, Vertex v, Scope scope) {
  if (scope == Scope::Facial) throw Error(ErrorCode::MalformedInput, "unique_max takes an open or closed scope");
  auto hood = scope == Scope::Open ? g.neighbors(v) : g.closed_neighborhood(v);
  return unique_maximum(detail::colors_of(sigma, hood));
}

}  // namespace nbcolor
