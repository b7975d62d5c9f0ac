#pragma once

// Exact search for colorings under a set of "must differ" pairs and a family
// of vertex groups that each have to satisfy the conflict-free or the
// unique-maximum rule. Every variant (neighborhood, facial, closure
// constraint sets, plain proper coloring) is translated into this form.
//
// The search is chronological backtracking with conflict-directed
// backjumping over a fixed vertex order, trying colors in increasing order.
// Backjumping only skips subtrees proven empty, so the first witness found is
// the lexicographically smallest one under the order.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbcolor/coloring.hpp"
#include "nbcolor/graph.hpp"
#include "nbcolor/variants.hpp"

namespace nbcolor {

struct ColoringProblem {
  std::size_t vertex_count = 0;
  std::vector<Edge> distinct;                // endpoints need different colors
  std::vector<std::vector<Vertex>> groups;   // each group must satisfy `rule`
  Rule rule = Rule::ConflictFree;
  /// Validity is invariant under permuting the palette (true for CF and for
  /// plain proper coloring). Enables first-use color symmetry breaking.
  bool palette_symmetric = true;
  std::vector<Vertex> order;  // search order, a permutation of the vertices
};

/// Descending degree, ties by lower index.
inline std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

namespace detail {

inline void add_groups(ColoringProblem& p, std::vector<std::vector<Vertex>> groups) {
  for (auto& grp : groups) {
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
    if (grp.size() >= 2) p.groups.push_back(std::move(grp));  // singletons are always satisfied
  }
  std::sort(p.groups.begin(), p.groups.end());
  p.groups.erase(std::unique(p.groups.begin(), p.groups.end()), p.groups.end());
}

}  // namespace detail

/// Plain proper coloring of G.
inline ColoringProblem proper_problem(const Graph& g) {
  ColoringProblem p;
  p.vertex_count = g.vertex_count();
  p.distinct = g.edges();
  p.palette_symmetric = true;
  p.order = degree_order(g);
  return p;
}

/// Neighborhood variant on G; open scope rejects isolated vertices.
inline ColoringProblem problem_for(const Graph& g, VariantSpec spec) {
  if (spec.scope == Scope::Facial) throw Error(ErrorCode::MissingEmbedding, "facial variants need a plane embedding");
  if (spec.scope == Scope::Open)
    if (auto iso = g.first_isolated_vertex())
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(*iso + 1) + " has an empty open neighborhood");
  ColoringProblem p;
  p.vertex_count = g.vertex_count();
  if (spec.proper()) p.distinct = g.edges();
  p.rule = spec.rule;
  p.palette_symmetric = spec.rule == Rule::ConflictFree;
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    groups.push_back(spec.scope == Scope::Open ? g.neighbors(v) : g.closed_neighborhood(v));
  // Open-scope neighborhoods of degree-1 vertices are singletons and drop out.
  detail::add_groups(p, std::move(groups));
  p.order = degree_order(g);
  return p;
}

inline ColoringProblem problem_for(const PlaneEmbedding& e, VariantSpec spec) {
  if (spec.scope != Scope::Facial) return problem_for(e.graph(), spec);
  ColoringProblem p;
  p.vertex_count = e.vertex_count();
  if (spec.proper()) p.distinct = e.graph().edges();
  p.rule = spec.rule;
  p.palette_symmetric = spec.rule == Rule::ConflictFree;
  std::vector<std::vector<Vertex>> groups;
  for (const auto& f : e.faces()) groups.push_back(f.vertices);
  detail::add_groups(p, std::move(groups));
  p.order = degree_order(e.graph());
  return p;
}

/// Checks a complete assignment against the problem directly.
inline bool satisfies(const ColoringProblem& p, std::span<const int> colors) {
  if (colors.size() != p.vertex_count) return false;
  for (auto [u, v] : p.distinct)
    if (colors[u] == colors[v]) return false;
  std::vector<int> buf;
  for (const auto& grp : p.groups) {
    buf.clear();
    for (Vertex v : grp) buf.push_back(colors[v]);
    if (!satisfies(p.rule, buf)) return false;
  }
  return true;
}

struct SolveOptions {
  /// Wall-clock limit per (instance, k) query.
  std::optional<std::chrono::duration<double>> time_budget = std::chrono::seconds(60);
  /// Workers for the split on the first vertex's colors.
  unsigned workers = 1;
};

namespace detail {

/// Bitset over search levels.
class LevelSet {
 public:
  explicit LevelSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void set_below(std::size_t i) {
    for (std::size_t w = 0; w < i / 64; ++w) words_[w] = ~std::uint64_t{0};
    if (i % 64) words_[i / 64] |= (std::uint64_t{1} << (i % 64)) - 1;
  }
  LevelSet& operator|=(const LevelSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Highest member, or -1 when empty.
  long highest() const {
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w]) return static_cast<long>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct TimeoutSignal {};

class Search {
 public:
  Search(const ColoringProblem& p, int k, std::chrono::steady_clock::time_point deadline, bool has_deadline,
         const std::atomic<bool>* cancel)
      : p_(p), k_(k), n_(p.vertex_count), deadline_(deadline), has_deadline_(has_deadline), cancel_(cancel) {
    nbr_.resize(n_);
    for (auto [u, v] : p.distinct) {
      nbr_[u].push_back(v);
      nbr_[v].push_back(u);
    }
    groups_of_.resize(n_);
    for (std::uint32_t gi = 0; gi < p.groups.size(); ++gi)
      for (Vertex v : p.groups[gi]) groups_of_[v].push_back(gi);
    color_.assign(n_, 0);
    forbid_.assign(n_ * static_cast<std::size_t>(k + 1), 0);
    gcount_.assign(p.groups.size() * static_cast<std::size_t>(k + 1), 0);
    guncolored_.resize(p.groups.size());
    for (std::size_t gi = 0; gi < p.groups.size(); ++gi) guncolored_[gi] = static_cast<std::uint32_t>(p.groups[gi].size());
    level_.assign(n_, 0);
    if (p.order.size() != n_) throw std::invalid_argument("search order must cover every vertex");
    for (std::size_t i = 0; i < n_; ++i) level_[p.order[i]] = i;
    conflicts_.assign(n_, LevelSet(n_));
    prefix_max_.assign(n_ + 1, 0);
  }

  /// Runs the search, optionally with the first vertex's color fixed.
  std::optional<std::vector<int>> run(std::optional<int> first_color = std::nullopt) {
    first_color_ = first_color;
    if (n_ == 0) return std::vector<int>{};
    if (k_ < 1) return std::nullopt;
    if (search(0) == kFound) return color_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static constexpr long kFound = -2;

  int& forbid(Vertex v, int c) { return forbid_[v * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)]; }
  int& gcount(std::size_t g, int c) { return gcount_[g * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)]; }

  void tick() {
    if ((++nodes_ & 0xFFF) != 0) return;
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) throw TimeoutSignal{};
    if (has_deadline_ && std::chrono::steady_clock::now() > deadline_) throw TimeoutSignal{};
  }

  bool feasible(std::size_t g) {
    const std::uint32_t open = guncolored_[g];
    if (p_.rule == Rule::UniqueMaximum) {
      for (int c = k_; c >= 1; --c) {
        const int cnt = gcount(g, c);
        if (cnt == 0) continue;
        // A repeated maximum can only be overtaken by a larger color later.
        if (cnt >= 2) return open > 0 && c < k_;
        return true;
      }
      return true;
    }
    bool has_unique = false, has_unused = false;
    for (int c = 1; c <= k_; ++c) {
      const int cnt = gcount(g, c);
      if (cnt == 1) has_unique = true;
      if (cnt == 0) has_unused = true;
    }
    if (open == 0) return has_unique;
    return has_unique || has_unused;
  }

  bool domain_empty(Vertex u) {
    for (int c = 1; c <= k_; ++c)
      if (forbid(u, c) == 0) return false;
    return true;
  }

  void apply(Vertex v, int c, int delta) {
    for (Vertex u : nbr_[v]) forbid(u, c) += delta;
    for (std::uint32_t g : groups_of_[v]) {
      gcount(g, c) += delta;
      guncolored_[g] -= static_cast<std::uint32_t>(delta);
    }
  }

  void blame_colored_neighbors(Vertex u, Vertex except, LevelSet& out) {
    for (Vertex w : nbr_[u])
      if (color_[w] != 0 && w != except) out.set(level_[w]);
  }

  bool assign(Vertex v, int c, LevelSet& conflict) {
    if (forbid(v, c) > 0) {
      for (Vertex u : nbr_[v])
        if (color_[u] == c) conflict.set(level_[u]);
      return false;
    }
    color_[v] = c;
    apply(v, c, +1);
    for (Vertex u : nbr_[v])
      if (color_[u] == 0 && domain_empty(u)) {
        blame_colored_neighbors(u, v, conflict);
        unassign(v, c);
        return false;
      }
    for (std::uint32_t g : groups_of_[v])
      if (!feasible(g)) {
        for (Vertex w : p_.groups[g])
          if (color_[w] != 0 && w != v) conflict.set(level_[w]);
        unassign(v, c);
        return false;
      }
    return true;
  }

  void unassign(Vertex v, int c) {
    apply(v, c, -1);
    color_[v] = 0;
  }

  long search(std::size_t i) {
    if (i == n_) return kFound;
    const Vertex v = p_.order[i];
    LevelSet& cs = conflicts_[i];
    cs.clear();
    int lo = 1, hi = k_;
    if (p_.palette_symmetric && prefix_max_[i] + 1 < k_) {
      hi = prefix_max_[i] + 1;
      cs.set_below(i);  // the restriction depends on every earlier choice
    }
    if (i == 0 && first_color_) lo = hi = *first_color_;
    LevelSet conflict(n_);
    for (int c = lo; c <= hi; ++c) {
      tick();
      conflict.clear();
      if (!assign(v, c, conflict)) {
        cs |= conflict;
        continue;
      }
      prefix_max_[i + 1] = std::max(prefix_max_[i], c);
      const long r = search(i + 1);
      if (r == kFound) return kFound;
      unassign(v, c);
      if (r < static_cast<long>(i)) return r;
    }
    const long h = cs.highest();
    if (h >= 0) {
      cs.reset(static_cast<std::size_t>(h));
      conflicts_[static_cast<std::size_t>(h)] |= cs;
    }
    return h;
  }

  const ColoringProblem& p_;
  int k_;
  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  const std::atomic<bool>* cancel_;
  std::optional<int> first_color_;
  std::vector<std::vector<Vertex>> nbr_;
  std::vector<std::vector<std::uint32_t>> groups_of_;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> gcount_;
  std::vector<std::uint32_t> guncolored_;
  std::vector<std::size_t> level_;
  std::vector<LevelSet> conflicts_;
  std::vector<int> prefix_max_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Lexicographically first coloring with palette {1..k}, or nullopt when the
/// exhaustive search proves there is none. Throws Timeout.
inline std::optional<Coloring> find_coloring(const ColoringProblem& p, int k, const SolveOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const bool has_deadline = options.time_budget.has_value();
  const auto deadline =
      has_deadline ? start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.time_budget) : start;
  std::optional<std::vector<int>> found;
  const bool split = options.workers > 1 && p.vertex_count > 0 && !p.palette_symmetric && k > 1;
  try {
    if (!split) {
      detail::Search s(p, k, deadline, has_deadline, nullptr);
      found = s.run();
    } else {
      // Subtree c of the first vertex; the smallest c with a witness wins.
      std::atomic<bool> cancel{false};
      std::vector<std::future<std::optional<std::vector<int>>>> jobs;
      std::vector<int> pending;
      for (int c = 1; c <= k; ++c) pending.push_back(c);
      std::size_t next = 0;
      std::vector<std::optional<std::vector<int>>> results(static_cast<std::size_t>(k));
      bool timed_out = false;
      while (next < pending.size() && !found) {
        jobs.clear();
        const std::size_t batch_end = std::min(pending.size(), next + options.workers);
        for (std::size_t j = next; j < batch_end; ++j)
          jobs.push_back(std::async(std::launch::async, [&, c = pending[j]]() -> std::optional<std::vector<int>> {
            detail::Search s(p, k, deadline, has_deadline, &cancel);
            return s.run(c);
          }));
        for (std::size_t j = 0; j < jobs.size(); ++j) {
          try {
            auto r = jobs[j].get();
            if (r && !found && !timed_out) {
              found = std::move(r);
              cancel = true;
            }
          } catch (const detail::TimeoutSignal&) {
            if (!found) timed_out = true;
          }
        }
        if (timed_out) throw detail::TimeoutSignal{};
        next = batch_end;
      }
    }
  } catch (const detail::TimeoutSignal&) {
    throw Error(ErrorCode::Timeout, "search budget exhausted at k=" + std::to_string(k));
  }
  if (!found) return std::nullopt;
  if (!satisfies(p, *found)) throw std::logic_error("search produced an invalid witness");
  return Coloring(std::move(*found), k);
}

/// Witness for a variant with palette {1..k}. Throws IsolatedVertex, Timeout.
inline std::optional<Coloring> exists_coloring(const Graph& g, VariantSpec spec, int k, const SolveOptions& options = {}) {
  auto witness = find_coloring(problem_for(g, spec), k, options);
  if (witness && !is_valid(g, *witness, spec)) throw std::logic_error("solver witness rejected by the checker");
  return witness;
}

inline std::optional<Coloring> exists_coloring(const PlaneEmbedding& e, VariantSpec spec, int k,
                                               const SolveOptions& options = {}) {
  auto witness = find_coloring(problem_for(e, spec), k, options);
  if (witness && !is_valid(e, *witness, spec)) throw std::logic_error("solver witness rejected by the checker");
  return witness;
}

enum class SolveStatus { Exact, LowerBoundOnly, Timeout };

constexpr std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Exact: return "exact";
    case SolveStatus::LowerBoundOnly: return "lower-bound-only";
    case SolveStatus::Timeout: return "timeout";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Exact;
  std::optional<int> value;     // set when status == Exact
  int lower_bound = 1;          // proven: no coloring with fewer colors
  std::optional<Coloring> witness;
};

/// Size of a maximum clique (simple branch and bound, small graphs).
inline std::size_t clique_number(const Graph& g) {
  std::size_t best = g.vertex_count() > 0 ? 1 : 0;
  std::vector<Vertex> current;
  auto expand = [&](auto& self, std::vector<Vertex> candidates) -> void {
    if (current.size() + candidates.size() <= best) return;
    while (!candidates.empty()) {
      if (current.size() + candidates.size() <= best) return;
      Vertex v = candidates.back();
      candidates.pop_back();
      std::vector<Vertex> next;
      for (Vertex u : candidates)
        if (g.has_edge(u, v)) next.push_back(u);
      current.push_back(v);
      best = std::max(best, current.size());
      self(self, std::move(next));
      current.pop_back();
    }
  };
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  expand(expand, all);
  return best;
}

struct ChromaticOptions {
  int max_colors = 32;
  SolveOptions solve;
};

namespace detail {

template <class Query>
SolveResult iterate_chromatic(int lower, const ChromaticOptions& options, Query&& query) {
  SolveResult result;
  result.lower_bound = std::max(lower, 1);
  for (int k = result.lower_bound; k <= options.max_colors; ++k) {
    try {
      if (auto w = query(k)) {
        result.status = SolveStatus::Exact;
        result.value = k;
        result.witness = std::move(w);
        return result;
      }
      result.lower_bound = k + 1;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Timeout) throw;
      result.status = SolveStatus::Timeout;
      return result;
    }
  }
  result.status = SolveStatus::LowerBoundOnly;
  return result;
}

}  // namespace detail

/// Plain chromatic number chi(G), solved by the same engine.
inline SolveResult proper_chromatic_number(const Graph& g, const ChromaticOptions& options = {}) {
  auto p = proper_problem(g);
  return detail::iterate_chromatic(static_cast<int>(clique_number(g)), options,
                                   [&](int k) { return find_coloring(p, k, options.solve); });
}

inline SolveResult chromatic_number(const Graph& g, VariantSpec spec, const ChromaticOptions& options = {}) {
  auto p = problem_for(g, spec);
  const int lb = spec.proper() ? static_cast<int>(clique_number(g)) : 1;
  return detail::iterate_chromatic(lb, options, [&](int k) {
    auto w = find_coloring(p, k, options.solve);
    if (w && !is_valid(g, *w, spec)) throw std::logic_error("solver witness rejected by the checker");
    return w;
  });
}

inline SolveResult chromatic_number(const PlaneEmbedding& e, VariantSpec spec, const ChromaticOptions& options = {}) {
  if (spec.scope != Scope::Facial) return chromatic_number(e.graph(), spec, options);
  auto p = problem_for(e, spec);
  const int lb = spec.proper() ? static_cast<int>(clique_number(e.graph())) : 1;
  return detail::iterate_chromatic(lb, options, [&](int k) {
    auto w = find_coloring(p, k, options.solve);
    if (w && !is_valid(e, *w, spec)) throw std::logic_error("solver witness rejected by the checker");
    return w;
  });
}

/// Proper facial CF / UM chromatic number; the answer is at most 4 / 5 on
/// every plane graph, anything larger throws BoundViolated.
inline SolveResult facial_chromatic_number(const PlaneEmbedding& e, Rule rule, const SolveOptions& solve = {}) {
  const int bound = rule == Rule::ConflictFree ? 4 : 5;
  ChromaticOptions options{bound, solve};
  const VariantSpec spec{Properness::Proper, rule, Scope::Facial};
  SolveResult r = chromatic_number(e, spec, options);
  if (r.status == SolveStatus::LowerBoundOnly)
    throw Error(ErrorCode::BoundViolated, "no proper facial " + spec.name() + " coloring with " + std::to_string(bound) +
                                              " colors on a plane graph");
  return r;
}

}  // namespace nbcolor
