#include <gtest/gtest.h>

#include <random>

#include "nbcolor/gadgets.hpp"
#include "nbcolor/generators.hpp"
#include "nbcolor/variants.hpp"
#include "oracles.hpp"

using namespace nbcolor;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = random_graph(2 + s % 7, 0.5, s);
    if (!g.first_isolated_vertex()) out.push_back(g);
  }
  for (std::size_t n = 3; n <= 7; ++n) out.push_back(cycle(n));
  return out;
}

}  // namespace

TEST(Check, C4Alternating) {
  Coloring c({1, 2, 1, 2});
  auto r = check(cycle(4), c, variant::pCFo);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->id, 0u);
  EXPECT_EQ(r->reason, ViolationReason::NoUniqueColor);
  EXPECT_FALSE(check(cycle(4), c, variant::pCFc));
}

TEST(Check, C5Rainbow) { EXPECT_FALSE(check(cycle(5), Coloring({1, 2, 3, 4, 5}), variant::pUMo)); }

TEST(Check, K2Monochromatic) {
  auto r = check(path(2), Coloring({1, 1}), variant::iUMc);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->id, 0u);
  EXPECT_EQ(r->reason, ViolationReason::MaxNotUnique);
}

TEST(Check, ProperFailureReported) {
  auto r = check(path(3), Coloring({1, 1, 2}), variant::pCFc);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->reason, ViolationReason::NotProper);
}

TEST(Check, G3PrimeWitness) {
  Gadget g = generate("G3prime");
  std::vector<int> colors(g.graph.vertex_count(), 1);
  colors[g.vertex("x0")] = 2;
  colors[g.vertex("y0")] = 3;
  colors[g.vertex("z0")] = 4;
  EXPECT_FALSE(check(g.graph, Coloring(colors), variant::iUMc));
}

TEST(Check, Errors) {
  Graph g(2);
  try {
    check(g, Coloring({1, 1}), variant::iCFo);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsolatedVertex);
  }
  EXPECT_FALSE(check(g, Coloring({1, 1}), variant::iCFc));
  try {
    check(path(2), Coloring({1, 2}), variant::facialCF);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingEmbedding);
  }
}

TEST(Check, DegreeOneOpenNeighborhoodIsFine) {
  EXPECT_FALSE(check(path(2), Coloring({1, 1}), variant::iUMo));
}

TEST(Check, Facial) {
  auto e = random_planar(3, 1);
  EXPECT_FALSE(check(e, Coloring({1, 2, 3}), variant::facialCF));
  EXPECT_FALSE(check(e, Coloring({1, 2, 3}), variant::facialUM));
  auto bad = check(e, Coloring({1, 2, 1}), variant::facialCF);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->reason, ViolationReason::NotProper);
}

TEST(UniqueMax, PathExamples) {
  Graph p = path(3);
  EXPECT_FALSE(unique_max(p, Coloring({1, 2, 1}), 1, Scope::Open));
  EXPECT_EQ(unique_max(p, Coloring({1, 2, 3}), 1, Scope::Open), 3);
  EXPECT_EQ(unique_max(p, Coloring({1, 2, 3}), 0, Scope::Closed), 2);
}

TEST(VariantNames, RoundTrip) {
  for (auto v : variant::neighborhood) EXPECT_EQ(parse_variant(v.name()), v);
  EXPECT_EQ(parse_variant("pUMf"), variant::facialUM);
  EXPECT_FALSE(parse_variant("xCFo"));
}

// Checker against the independent oracle on every assignment of small graphs.
TEST(Check, MatchesOracleExhaustively) {
  for (const Graph& g : corpus()) {
    if (g.vertex_count() > 6) continue;
    oracle::enumerate(g.vertex_count(), 3, [&](const std::vector<int>& c) {
      for (auto v : variant::neighborhood) EXPECT_EQ(is_valid(g, Coloring(c, 3), v), oracle::valid(g, c, v));
      return false;
    });
  }
}

TEST(Properties, ImplicationsOnAllAssignments) {
  for (const Graph& g : corpus()) {
    if (g.vertex_count() > 6) continue;
    oracle::enumerate(g.vertex_count(), 4, [&](const std::vector<int>& raw) {
      Coloring c(raw, 4);
      for (auto p : {Properness::Proper, Properness::Improper})
        for (auto s : {Scope::Open, Scope::Closed}) {
          const VariantSpec um{p, Rule::UniqueMaximum, s}, cf{p, Rule::ConflictFree, s};
          if (is_valid(g, c, um)) { EXPECT_TRUE(is_valid(g, c, cf)); }
        }
      for (auto r : {Rule::ConflictFree, Rule::UniqueMaximum}) {
        const VariantSpec po{Properness::Proper, r, Scope::Open}, pc{Properness::Proper, r, Scope::Closed};
        if (is_valid(g, c, po)) { EXPECT_TRUE(is_valid(g, c, pc)); }
        for (auto s : {Scope::Open, Scope::Closed}) {
          const VariantSpec pr{Properness::Proper, r, s}, im{Properness::Improper, r, s};
          if (is_valid(g, c, pr)) { EXPECT_TRUE(is_valid(g, c, im)); }
        }
      }
      // a larger palette with the same colors changes nothing
      for (auto v : variant::neighborhood) EXPECT_EQ(is_valid(g, c, v), is_valid(g, Coloring(raw, 9), v));
      return false;
    });
  }
}

TEST(Properties, ColorPermutations) {
  std::mt19937_64 rng(11);
  for (const Graph& g : corpus()) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> raw(g.vertex_count());
      for (int& c : raw) c = 1 + static_cast<int>(rng() % 5);
      std::vector<int> perm = {1, 2, 3, 4, 5};
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> mono = {1, 2, 3, 4, 5};  // strictly increasing map into 1..9
      for (int i = 0, next = 0; i < 5; ++i) mono[i] = (next += 1 + static_cast<int>(rng() % 2));
      std::vector<int> permuted(raw.size()), lifted(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        permuted[i] = perm[raw[i] - 1];
        lifted[i] = mono[raw[i] - 1];
      }
      for (auto v : variant::neighborhood) {
        const bool base = is_valid(g, Coloring(raw, 10), v);
        if (v.rule == Rule::ConflictFree) { EXPECT_EQ(base, is_valid(g, Coloring(permuted, 10), v)); }
        EXPECT_EQ(base, is_valid(g, Coloring(lifted, 10), v));
      }
    }
  }
}

// On C5 every pUMo coloring is a rainbow (two neighbors of a vertex are at
// distance two), so no palette permutation can break one. Colorings that
// repeat colors, here iUMc ones, do break under some permutation.
TEST(Properties, NonMonotonePermutationCanBreakUniqueMaximum) {
  const Graph c5 = cycle(5);
  std::vector<int> perm = {1, 2, 3, 4, 5};
  do EXPECT_TRUE(is_valid(c5, Coloring(perm), variant::pUMo));
  while (std::next_permutation(perm.begin(), perm.end()));

  std::size_t breaks = 0;
  oracle::enumerate(5, 3, [&](const std::vector<int>& raw) {
    if (!is_valid(c5, Coloring(raw, 3), variant::iUMc)) return false;
    std::vector<int> p = {1, 2, 3};
    while (std::next_permutation(p.begin(), p.end())) {
      std::vector<int> mapped(5);
      for (int i = 0; i < 5; ++i) mapped[i] = p[raw[i] - 1];
      if (!is_valid(c5, Coloring(mapped, 3), variant::iUMc)) ++breaks;
      EXPECT_TRUE(is_valid(c5, Coloring(mapped, 3), variant::iCFc)) << "CF must survive";
    }
    return false;
  });
  EXPECT_GT(breaks, 0u);
}
