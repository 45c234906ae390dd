#include <random>

#include <gtest/gtest.h>

#include "iml/core/digraph.hpp"
#include "iml/core/error.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/io.hpp"
#include "iml/core/structure.hpp"
#include "oracles.hpp"

namespace iml {
namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

TEST(StructureReportTest, EmptyGraph) {
  auto r = structure_report(graphs::empty(3));
  EXPECT_EQ(r.max_degree, 0);
  EXPECT_EQ(r.components, 3);
}

TEST(StructureReportTest, FiveCycle) {
  auto r = structure_report(graphs::cycle(5));
  EXPECT_EQ(r.max_degree, 2);
  EXPECT_EQ(r.min_degree, 2);
  EXPECT_FALSE(r.bipartite);
  EXPECT_EQ(r.vertex_connectivity, 2);
  EXPECT_EQ(r.edge_connectivity, 2);
}

TEST(StructureReportTest, PetersenConnectivityMatchesCutEnumeration) {
  Graph p = graphs::petersen();
  EXPECT_EQ(oracle::vertex_connectivity(p), 3);
  EXPECT_EQ(structure_report(p).vertex_connectivity, 3);
  EXPECT_EQ(structure_report(p).edge_connectivity, 3);
}

TEST(StructureReportTest, VertexConnectivityRandomAgainstCuts) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(7, 0.55, rng);
    auto r = structure_report(g);
    EXPECT_EQ(r.vertex_connectivity, is_connected(g) ? oracle::vertex_connectivity(g) : 0);
    EXPECT_LE(r.vertex_connectivity, r.min_degree);
    EXPECT_LE(r.vertex_connectivity, r.edge_connectivity);
  }
}

TEST(MadTest, Examples) {
  EXPECT_EQ(mad(graphs::complete(4)), Rational(3));
  EXPECT_EQ(mad(graphs::complete(5)), Rational(4));
  EXPECT_EQ(oracle::mad(graphs::path(3)), Rational(4, 3));
  EXPECT_EQ(mad(graphs::path(3)), Rational(4, 3));
  EXPECT_EQ(mad(graphs::empty(2)), Rational(0));
}

TEST(MadTest, RandomGraphsMatchSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    Graph g = random_graph(2 + t % 9, 0.35, rng);
    Rational m = mad(g);
    EXPECT_EQ(m, oracle::mad(g));
    EXPECT_GE(m, Rational(2 * g.size(), g.order()));
    Mask s = densest_subgraph(g);
    if (g.size() > 0) EXPECT_EQ(Rational(2 * g.edges_within(s), popcount(s)), m);
  }
}

TEST(MadTest, AtLeastMinDegreeOfInducedSubgraphs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(9, 0.4, rng);
    Rational m = mad(g);
    for (Mask s = 1; s < bit(9); s += 37) EXPECT_GE(m, Rational(g.induced(s).min_degree()));
  }
}

TEST(IndependentSetTest, Examples) {
  EXPECT_EQ(popcount(max_independent_set(graphs::empty(5))), 5);
  EXPECT_EQ(popcount(max_independent_set(graphs::cycle(5))), 2);
  EXPECT_EQ(oracle::independence_number(graphs::petersen()), 4);
  EXPECT_EQ(popcount(max_independent_set(graphs::petersen())), 4);
}

TEST(IndependentSetTest, MatchesExhaustiveOptimum) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_graph(1 + t % 9, 0.1 + 0.005 * t, rng);
    Mask s = max_independent_set(g);
    for_each_bit(s, [&](int v) { EXPECT_EQ(g.row(v) & s, 0u); });
    EXPECT_EQ(popcount(s), oracle::independence_number(g));
  }
}

TEST(CliqueTest, LargeMultiwordGraph) {
  Graph g = graphs::complete_bipartite(60, 50).complement();  // K_60 + K_50
  EXPECT_EQ(max_clique(g).size(), 60u);
}

TEST(BicliqueTest, Examples) {
  EXPECT_EQ(biclique_number(graphs::path(2)), 2);
  EXPECT_EQ(biclique_number(graphs::cycle(4)), 4);
  EXPECT_EQ(oracle::biclique(graphs::petersen()), 4);
  EXPECT_EQ(biclique_number(graphs::petersen()), 4);
  EXPECT_THROW(biclique_number(graphs::empty(3)), Error);
}

TEST(BicliqueTest, RandomAgainstOracle) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(6, 0.5, rng);
    if (g.size() == 0) continue;
    EXPECT_EQ(biclique_number(g), oracle::biclique(g));
  }
}

TEST(FormatTest, Graph6KnownStrings) {
  EXPECT_EQ(io::to_graph6(graphs::complete(4)), "C~");
  EXPECT_EQ(io::to_graph6(graphs::petersen().permuted(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9})),
            io::to_graph6(graphs::petersen()));
  EXPECT_EQ(io::from_graph6("C~"), graphs::complete(4));
  EXPECT_THROW(io::from_graph6("C~~"), Error);
}

TEST(FormatTest, RoundTripsAreExact) {
  std::mt19937_64 rng(13);
  for (int n : {0, 1, 2, 5, 62, 63, 70}) {
    Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(io::from_graph6(io::to_graph6(g)), g);
    EXPECT_EQ(io::from_edge_list(io::to_edge_list(g)), g);
  }
  for (int n : {1, 3, 8, 20}) {
    Digraph d(n);
    std::bernoulli_distribution coin(0.3);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) d.add_arc(u, v);
    EXPECT_EQ(io::from_digraph6(io::to_digraph6(d)), d);
    EXPECT_EQ(io::from_arc_list(io::to_arc_list(d)), d);
  }
  Hypergraph h(5, {0b00111, 0b11100, 0b00111}, 3);
  EXPECT_EQ(io::hypergraph_from_json(io::to_json(h)), h);
  SetFamily f(4, {0b0011, 0b1100, 0});
  EXPECT_EQ(io::set_family_from_json(io::to_json(f)), f);
}

TEST(FormatTest, Digraph6KnownString) {
  // Rows 010 001 100 packed six bits per byte.
  Digraph c = digraphs::directed_cycle(3);
  EXPECT_EQ(io::to_digraph6(c), "&BP_");
}

TEST(FormatTest, RejectsMalformedInput) {
  EXPECT_THROW(io::from_edge_list("3 2\n0 1\n"), Error);
  EXPECT_THROW(io::from_edge_list("3 1\n0 0\n"), Error);
  EXPECT_THROW(io::from_arc_list("3\n0 => 1\n"), Error);
  EXPECT_THROW(SetFamily(3, {1, 1}), Error);
  EXPECT_THROW(Hypergraph(3, {0b011, 0b111}, 2), Error);
}

TEST(DigraphTest, StrongComponentsAreTopologicallyOrdered) {
  Digraph t = digraphs::transitive_tournament(4);
  auto comps = strong_components(t);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps.front(), bit(0));
  EXPECT_TRUE(strongly_connected(digraphs::directed_cycle(5)));
  EXPECT_TRUE(digraphs::quadratic_residue_tournament(7).is_regular_tournament());
}

}  // namespace
}  // namespace iml
