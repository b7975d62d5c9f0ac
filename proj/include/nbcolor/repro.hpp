#pragma once

// One-shot reproduction of the gadget values, constructive bounds and
// oracle relations. Each row records what was expected, what was computed
// and whether a completed computation contradicts the expectation.

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nbcolor/construct.hpp"
#include "nbcolor/exact.hpp"
#include "nbcolor/gadgets.hpp"
#include "nbcolor/generators.hpp"

namespace nbcolor {

enum class Tier { Quick, Full };

enum class RowStatus { Pass, Contradiction, Timeout };

constexpr std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Contradiction: return "CONTRADICTION";
    case RowStatus::Timeout: return "timeout";
  }
  return "?";
}

struct ReproRow {
  std::string claim;
  std::string variant;
  std::string instance;
  std::string expected;
  std::string computed;
  RowStatus status = RowStatus::Pass;
  double seconds = 0;
};

struct ReproReport {
  std::vector<ReproRow> rows;

  /// 0 all pass, 1 some contradiction, 3 only timeouts left open.
  int exit_code() const {
    bool timeout = false;
    for (const auto& r : rows) {
      if (r.status == RowStatus::Contradiction) return 1;
      timeout = timeout || r.status == RowStatus::Timeout;
    }
    return timeout ? 3 : 0;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << std::left << std::setw(44) << "claim" << std::setw(16) << "variant" << std::setw(26) << "instance"
        << std::setw(14) << "expected" << std::setw(30) << "computed" << std::setw(15) << "status"
        << "seconds\n";
    for (const auto& r : rows)
      out << std::setw(44) << r.claim << std::setw(16) << r.variant << std::setw(26) << r.instance << std::setw(14)
          << r.expected << std::setw(30) << r.computed << std::setw(15) << to_string(r.status) << std::fixed
          << std::setprecision(3) << r.seconds << '\n';
    return out.str();
  }

  std::string to_csv() const {
    auto quote = [](const std::string& s) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    std::ostringstream out;
    out << "claim,variant,instance,expected,computed,status,seconds\n";
    for (const auto& r : rows)
      out << quote(r.claim) << ',' << quote(r.variant) << ',' << quote(r.instance) << ',' << quote(r.expected) << ','
          << quote(r.computed) << ',' << to_string(r.status) << ',' << std::fixed << std::setprecision(3) << r.seconds
          << '\n';
    return out.str();
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Gadget value: the claimed value must admit a witness and, for equality,
/// one color less must be exhausted.
inline ReproRow gadget_row(const std::string& name, const Claim& claim, std::chrono::duration<double> budget) {
  const auto start = Clock::now();
  Gadget g = generate(name);
  ReproRow row{claim.claim, claim.variant.name(), name,
               (claim.relation == Relation::Equal ? "= " : "<= ") + std::to_string(claim.value), "", RowStatus::Pass, 0};
  SolveOptions opts{budget, 1};
  bool have_upper = false;
  try {
    auto upper = exists_coloring(g.graph, claim.variant, claim.value, opts);
    have_upper = upper.has_value();
    if (!upper) {
      row.computed = "> " + std::to_string(claim.value);
      row.status = RowStatus::Contradiction;
    } else if (claim.relation == Relation::Equal) {
      auto lower = exists_coloring(g.graph, claim.variant, claim.value - 1, opts);
      row.computed = lower ? "<= " + std::to_string(claim.value - 1) : std::to_string(claim.value);
      row.status = lower ? RowStatus::Contradiction : RowStatus::Pass;
    } else {
      ChromaticOptions copts{claim.value, opts};
      auto r = chromatic_number(g.graph, claim.variant, copts);
      row.computed = r.value ? std::to_string(*r.value) : "<= " + std::to_string(claim.value);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Timeout) throw;
    row.computed = have_upper ? "witness found, lower bound open" : "open";
    row.status = RowStatus::Timeout;
  }
  row.seconds = seconds_since(start);
  return row;
}

/// Upper witness only (for the long exhaustions skipped in the quick tier).
inline ReproRow gadget_upper_row(const std::string& name, const Claim& claim) {
  const auto start = Clock::now();
  Gadget g = generate(name);
  auto upper = exists_coloring(g.graph, claim.variant, claim.value);
  ReproRow row{claim.claim + " (upper witness)", claim.variant.name(), name, "<= " + std::to_string(claim.value),
               upper ? "<= " + std::to_string(claim.value) : "> " + std::to_string(claim.value),
               upper ? RowStatus::Pass : RowStatus::Contradiction, seconds_since(start)};
  return row;
}

struct PipelineSpec {
  std::string claim;
  std::string name;
  VariantSpec variant;
  int bound;
};

template <class Run>
ReproRow pipeline_row(const PipelineSpec& spec, int seeds, std::string corpus, Run&& run) {
  const auto start = Clock::now();
  int worst = 0, violations = 0;
  for (int s = 0; s < seeds; ++s) {
    auto [graph, coloring] = run(static_cast<std::uint64_t>(s));
    worst = std::max(worst, coloring.max_color());
    if (!is_valid(graph, coloring, spec.variant) || coloring.max_color() > spec.bound) ++violations;
  }
  return {spec.claim,
          spec.variant.name(),
          std::to_string(seeds) + " " + corpus,
          "<= " + std::to_string(spec.bound),
          "max " + std::to_string(worst) + ", " + std::to_string(violations) + " invalid",
          violations == 0 ? RowStatus::Pass : RowStatus::Contradiction,
          seconds_since(start)};
}

inline std::size_t planar_size(std::uint64_t seed) { return 3 + seed % 12; }        // 3..14
inline std::size_t outerplanar_size(std::uint64_t seed) { return 3 + seed % 18; }   // 3..20
inline double thinning(std::uint64_t seed) { return 0.15 * static_cast<double>(seed % 4); }

inline int chi(const Graph& g) { return *proper_chromatic_number(g).value; }
inline int chi(const Graph& g, VariantSpec v) { return *chromatic_number(g, v).value; }

}  // namespace detail

/// Runs every row of the tier; `progress` sees each row as it completes.
inline ReproReport reproduce(Tier tier, const std::function<void(const ReproRow&)>& progress = {}) {
  using namespace std::chrono_literals;
  using detail::Clock;
  ReproReport report;
  auto emit = [&](ReproRow row) {
    if (progress) progress(row);
    report.rows.push_back(std::move(row));
  };
  const bool full = tier == Tier::Full;

  for (const std::string name : {"G3", "G3prime", "O_iUMo", "H_iUMo", "fritsch", "O_pUMc"})
    for (const auto& c : claimed_values(name)) emit(detail::gadget_row(name, c, 60s));
  for (int n = 3; n <= 12; ++n) {
    const std::string name = "C" + std::to_string(n);
    for (const auto& c : claimed_values(name)) emit(detail::gadget_row(name, c, 60s));
  }
  for (const std::string name : {"H_pCFo", "H_pUMo"})
    for (const auto& c : claimed_values(name))
      emit(full ? detail::gadget_row(name, c, 1800s) : detail::gadget_upper_row(name, c));

  const int seeds = full ? 200 : 50;
  auto planar = [&](auto&& color) {
    return [&, color](std::uint64_t s) {
      auto e = random_planar(detail::planar_size(s), s, detail::thinning(s));
      return std::pair{e.graph(), color(e)};
    };
  };
  emit(detail::pipeline_row({"planar iUMc <= 6 construction", "iumc6", variant::iUMc, 6}, seeds, "planar n<=14",
                            planar([](const PlaneEmbedding& e) { return color_iumc(e); })));
  emit(detail::pipeline_row({"planar pCFo <= 8 construction", "pcfo8", variant::pCFo, 8}, seeds, "planar n<=14",
                            planar([](const PlaneEmbedding& e) { return color_pcfo(e); })));
  emit(detail::pipeline_row({"planar pUMo <= 10 construction", "pumo10", variant::pUMo, 10}, seeds, "planar n<=14",
                            planar([](const PlaneEmbedding& e) { return color_pumo(e); })));
  emit(detail::pipeline_row({"planar pUMc <= 8 construction", "pumc8", variant::pUMc, 8}, seeds, "planar n<=14",
                            planar([](const PlaneEmbedding& e) { return color_pumc(e); })));
  emit(detail::pipeline_row({"outerplanar pUMo <= 5 recursion", "outerplanar-pumo5", variant::pUMo, 5}, seeds,
                            "outerplanar n<=20", [](std::uint64_t s) {
                              Graph g = random_outerplanar(detail::outerplanar_size(s), s, detail::thinning(s));
                              return std::pair{g, color_pumo_outerplanar(g)};
                            }));

  {
    const auto start = Clock::now();
    int mismatches = 0;
    const int count = full ? 100 : 30;
    for (int s = 0; s < count; ++s) {
      Graph g = random_graph(3 + s % 7, 0.45, static_cast<std::uint64_t>(s));
      if (detail::chi(g) != detail::chi(g, variant::pCFc)) ++mismatches;
    }
    emit({"pCFc equals the chromatic number", "pCFc vs proper", std::to_string(count) + " random n<=9", "equal",
          mismatches == 0 ? "equal" : std::to_string(mismatches) + " differ",
          mismatches == 0 ? RowStatus::Pass : RowStatus::Contradiction, detail::seconds_since(start)});
  }
  {
    const auto start = Clock::now();
    const Edge two_c4[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}};
    Graph g = Graph::from_edges(7, two_c4);
    const int base = detail::chi(g), sub = detail::chi(subdivide(g), variant::iCFo);
    emit({"subdivision can exceed chi", "iCFo(S(G))", "two C4 sharing a vertex", "chi=2, 3",
          "chi=" + std::to_string(base) + ", " + std::to_string(sub),
          base == 2 && sub == 3 ? RowStatus::Pass : RowStatus::Contradiction, detail::seconds_since(start)});
  }
  {
    const auto start = Clock::now();
    int worst_cf = 0, worst_um = 0, invalid = 0;
    const int count = full ? 100 : 30;
    for (int s = 0; s < count; ++s) {
      auto e = random_planar(3 + s % 10, static_cast<std::uint64_t>(s), detail::thinning(s));
      auto cf = facial_cf_coloring(e);
      auto um = facial_um_coloring(e);
      worst_cf = std::max(worst_cf, cf.max_color());
      worst_um = std::max(worst_um, um.max_color());
      if (!is_valid(e, cf, variant::facialCF) || !is_valid(e, um, variant::facialUM)) ++invalid;
    }
    const bool ok = invalid == 0 && worst_cf <= 4 && worst_um <= 5;
    emit({"facial CF <= 4 and facial UM <= 5", "pCFf / pUMf", std::to_string(count) + " planar n<=12", "<= 4 / <= 5",
          std::to_string(worst_cf) + " / " + std::to_string(worst_um) + ", " + std::to_string(invalid) + " invalid",
          ok ? RowStatus::Pass : RowStatus::Contradiction, detail::seconds_since(start)});
  }
  return report;
}

}  // namespace nbcolor
