#include <gtest/gtest.h>

#include "nbcolor/exact.hpp"
#include "nbcolor/gadgets.hpp"
#include "nbcolor/generators.hpp"
#include "oracles.hpp"

using namespace nbcolor;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

int value(const Graph& g, VariantSpec v) {
  auto r = chromatic_number(g, v);
  EXPECT_EQ(r.status, SolveStatus::Exact);
  return *r.value;
}

}  // namespace

TEST(Exists, C5ProperOpenCF) {
  EXPECT_FALSE(exists_coloring(cycle(5), variant::pCFo, 4));
  auto w = exists_coloring(cycle(5), variant::pCFo, 5);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->colors, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Exists, FritschNeedsSix) {
  Gadget f = generate("fritsch");
  EXPECT_FALSE(exists_coloring(f.graph, variant::pUMo, 5));
  EXPECT_TRUE(exists_coloring(f.graph, variant::pUMo, 6));
}

TEST(Exists, K4ProperClosedCF) { EXPECT_TRUE(exists_coloring(complete(4), variant::pCFc, 4)); }

TEST(Exists, IsolatedVertexRejectedForOpenScope) {
  try {
    exists_coloring(Graph(1), variant::iUMo, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsolatedVertex);
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(value(cycle(6), variant::pCFo), 3);
  EXPECT_EQ(value(generate("G3prime").graph, variant::iUMc), 4);
  EXPECT_EQ(value(generate("O_pUMc").graph, variant::pUMc), 5);
  for (auto v : {variant::pCFo, variant::pUMo}) EXPECT_EQ(value(complete(2), v), 2);
  // improper: the single neighbor color is unique, so one color suffices
  for (auto v : {variant::iCFo, variant::iUMo}) EXPECT_EQ(value(complete(2), v), 1);
}

TEST(Chromatic, C6NotTwoColorable) {
  EXPECT_FALSE(oracle::naive_exists(cycle(6), variant::pCFo, 2));
  EXPECT_TRUE(oracle::valid(cycle(6), {1, 2, 3, 1, 2, 3}, variant::pCFo));
}

TEST(Chromatic, BudgetExhaustionIsReported) {
  Gadget h = generate("H_pUMo");
  SolveOptions tiny{std::chrono::duration<double>(1e-4), 1};
  try {
    find_coloring(problem_for(h.graph, variant::pUMo), 5, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Timeout);
  }
  ChromaticOptions opts{8, tiny};
  auto r = chromatic_number(h.graph, variant::pUMo, opts);
  EXPECT_EQ(r.status, SolveStatus::Timeout);
  EXPECT_FALSE(r.value);
}

TEST(Facial, Values) {
  auto k3 = random_planar(3, 0);
  EXPECT_EQ(*facial_chromatic_number(k3, Rule::ConflictFree).value, 3);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto e = random_planar(4 + s % 8, s, 0.3);
    EXPECT_LE(*facial_chromatic_number(e, Rule::ConflictFree).value, 4);
    EXPECT_LE(*facial_chromatic_number(e, Rule::UniqueMaximum).value, 5);
  }
  const Edge star[] = {{0, 1}, {0, 2}, {0, 3}, {3, 4}};
  auto tree = find_plane_embedding(Graph::from_edges(5, star));
  ASSERT_TRUE(tree);
  EXPECT_LE(*facial_chromatic_number(*tree, Rule::ConflictFree).value, 4);
}

// Lexicographically first valid assignment when vertices are read in `order`.
std::optional<std::vector<int>> first_in_order(const Graph& g, VariantSpec s, int k, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  auto perm = oracle::enumerate(n, k, [&](const std::vector<int>& c) {
    std::vector<int> col(n);
    for (std::size_t i = 0; i < n; ++i) col[order[i]] = c[i];
    return oracle::valid(g, col, s);
  });
  if (!perm) return std::nullopt;
  std::vector<int> col(n);
  for (std::size_t i = 0; i < n; ++i) col[order[i]] = (*perm)[i];
  return col;
}

bool has_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

TEST(Differential, AgreesWithEnumerationOnSmallGraphs) {
  int checked = 0;
  for (const Graph& g : oracle::all_graphs(5)) {
    for (VariantSpec s : variant::neighborhood) {
      const bool open = s.scope == Scope::Open;
      for (int k = 1; k <= 4; ++k) {
        if (open && has_isolated(g)) {
          EXPECT_THROW(exists_coloring(g, s, k), Error);
          continue;
        }
        auto expected = first_in_order(g, s, k, degree_order(g));
        auto got = exists_coloring(g, s, k);
        ASSERT_EQ(expected.has_value(), got.has_value()) << s.name() << " k=" << k << " n=" << g.vertex_count();
        if (got) { EXPECT_EQ(got->colors, *expected) << s.name() << " k=" << k; }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Oracle, ClosedProperCFIsChromaticNumber) {
  for (const Graph& g : oracle::all_graphs(6)) EXPECT_EQ(value(g, variant::pCFc), oracle::naive_chromatic(g));
}

TEST(Oracle, SandwichAndImplications) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = random_graph(4 + s % 5, 0.5, s);
    if (has_isolated(g)) continue;
    const int chi = *proper_chromatic_number(g).value;
    const int cfo = value(g, variant::pCFo), umo = value(g, variant::pUMo);
    const int cfc = value(g, variant::pCFc), umc = value(g, variant::pUMc);
    EXPECT_LE(chi, cfo);
    EXPECT_LE(cfo, umo);
    EXPECT_EQ(cfc, chi);
    EXPECT_LE(cfc, umc);
    EXPECT_LE(value(g, variant::iCFo), cfo);
    EXPECT_LE(value(g, variant::iUMc), umc);
    EXPECT_LE(value(g, variant::iCFc), value(g, variant::iUMc));
  }
}

TEST(Oracle, SubdivisionNeverBelowChi) {
  std::vector<Graph> corpus = oracle::all_graphs(5);
  for (std::uint64_t s = 0; s < 30; ++s) corpus.push_back(random_graph(6 + s % 3, 0.4, s));
  for (const Graph& g : corpus) {
    if (has_isolated(g)) continue;
    EXPECT_GE(value(subdivide(g), variant::iCFo), *proper_chromatic_number(g).value);
  }
}

TEST(Oracle, SubdivisionStrictOnTwoSquares) {
  const Edge two_c4[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}};
  Graph g = Graph::from_edges(7, two_c4);
  EXPECT_EQ(*proper_chromatic_number(g).value, 2);
  EXPECT_EQ(value(subdivide(g), variant::iCFo), 3);
}

TEST(Exact, WorkerCountDoesNotChangeWitness) {
  Gadget o = generate("O_pUMc");
  Gadget f = generate("fritsch");
  for (const Gadget* gad : {&o, &f})
    for (VariantSpec s : {variant::pUMo, variant::pUMc, variant::iUMc}) {
      auto one = chromatic_number(gad->graph, s, {12, {std::chrono::seconds(120), 1}});
      auto four = chromatic_number(gad->graph, s, {12, {std::chrono::seconds(120), 4}});
      ASSERT_EQ(one.value, four.value);
      ASSERT_TRUE(one.witness && four.witness);
      EXPECT_EQ(one.witness->colors, four.witness->colors) << gad->name << " " << s.name();
    }
}

TEST(Exact, RepeatedRunsAreIdentical) {
  Graph g = random_planar(11, 3, 0.3).graph();
  auto a = chromatic_number(g, variant::pUMo);
  auto b = chromatic_number(g, variant::pUMo);
  EXPECT_EQ(a.witness->colors, b.witness->colors);
}
