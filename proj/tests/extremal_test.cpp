#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/core/structure.hpp"
#include "iml/extremal/extremal.hpp"
#include "iml/gen/generate.hpp"
#include "oracles.hpp"

namespace iml::ext {
namespace {

int brute_turan(int n, const std::vector<Graph>& forbidden) {
  int best = 0;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    int m = popcount(code);
    if (m <= best) continue;
    Graph g = oracle::graph_from_code(n, code);
    bool free = true;
    for (const auto& f : forbidden) free = free && (f.order() > n || !oracle::copy_by_maps(g, g.all(), f));
    if (free) best = m;
  }
  return best;
}

TEST(TuranTest, Examples) {
  EXPECT_EQ(turan_number(5, {graphs::cycle(3)}).edges, 6);
  EXPECT_EQ(turan_number(7, {graphs::cycle(3)}).edges, 12);
  EXPECT_EQ(turan_number(5, all_cycles(5)).edges, 4);
  EXPECT_EQ(turan_number(8, all_cycles(8)).edges, 7);
  auto r = turan_number(6, {graphs::cycle(4)});
  EXPECT_TRUE(is_free_of(r.witness, {graphs::cycle(4)}));
  EXPECT_EQ(r.witness.size(), r.edges);
  EXPECT_EQ(turan_number(4, {}).edges, 6);
  EXPECT_THROW(turan_number(11, {graphs::cycle(3)}), Error);
}

TEST(TuranTest, MatchesLabelledEnumeration) {
  std::vector<std::vector<Graph>> families = {
      {graphs::cycle(3)}, {graphs::cycle(4)}, {graphs::path(4)}, {graphs::star(3)},
      {graphs::cycle(3), graphs::cycle(4)}, {graphs::complete(4)}, {graphs::cycle(5)}};
  for (int n = 1; n <= 6; ++n)
    for (const auto& f : families) ASSERT_EQ(turan_number(n, f).edges, brute_turan(n, f)) << "n=" << n;
}

TEST(TuranTest, Monotonicity) {
  for (int n = 3; n <= 8; ++n) {
    // More vertices never lower the maximum, more patterns never raise it.
    EXPECT_LE(turan_number(n - 1, {graphs::cycle(4)}).edges, turan_number(n, {graphs::cycle(4)}).edges);
    int c4 = turan_number(n, {graphs::cycle(4)}).edges;
    int c34 = turan_number(n, {graphs::cycle(3), graphs::cycle(4)}).edges;
    EXPECT_LE(c34, c4);
    // Forbidding only the long cycles of a prefix family allows at least as much.
    for (int m = 4; m <= n; ++m)
      EXPECT_GE(turan_number(n, all_cycles(m - 1)).edges, turan_number(n, all_cycles(m)).edges);
  }
}

Hypergraph from_graph(const Graph& g) {
  std::vector<Mask> edges;
  for (auto [u, v] : g.edges()) edges.push_back(bit(u) | bit(v));
  return Hypergraph(g.order(), edges, 2);
}

bool brute_l_ham(const Hypergraph& h, int k, int l) {
  const int n = h.order();
  if (2 * k - l > n) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Mask e : overlap_cycle_edges(p, k, l)) ok = ok && h.has_edge(e);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Hypergraph random_k_graph(int n, int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Mask> edges;
  for (Mask s = 0; s < bit(n); ++s)
    if (popcount(s) == k && coin(rng)) edges.push_back(s);
  return Hypergraph(n, edges, k);
}

TEST(OverlapCycleTest, GraphCase) {
  EXPECT_TRUE(is_l_hamiltonian(from_graph(graphs::cycle(6)), 1));
  EXPECT_FALSE(is_l_hamiltonian(from_graph(graphs::path(6)), 1));
  EXPECT_FALSE(is_l_hamiltonian(from_graph(graphs::petersen()), 1));
  auto order = l_hamiltonian_cycle(from_graph(graphs::prism(4)), 1);
  ASSERT_TRUE(order.has_value());
  for (Mask e : overlap_cycle_edges(*order, 2, 1)) EXPECT_TRUE(graphs::prism(4).has_edge(lowest_bit(e), lowest_bit(e & (e - 1))));
}

TEST(OverlapCycleTest, TightFiveCycle) {
  Hypergraph tight(5, {0b00111, 0b01110, 0b11100, 0b11001, 0b10011}, 3);
  EXPECT_TRUE(is_l_hamiltonian(tight, 2));
  EXPECT_FALSE(is_l_ham_saturated(tight, 2));
  Hypergraph c6 = from_graph(graphs::cycle(6));
  EXPECT_TRUE(is_l_hamiltonian(c6, 1));
  EXPECT_FALSE(is_l_ham_saturated(c6, 1));
}

TEST(OverlapCycleTest, Preconditions) {
  Hypergraph h(7, {0b111}, 3);
  try {
    is_l_hamiltonian(h, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadDivisibility);
  }
  try {
    is_l_hamiltonian(h, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(sat_search(7, 3, 1), Error);
}

TEST(OverlapCycleTest, MatchesPermutationSearch) {
  std::mt19937_64 rng(11);
  struct Case { int n, k, l; double p; };
  for (Case c : {Case{6, 2, 1, 0.5}, Case{7, 2, 1, 0.6}, Case{6, 3, 1, 0.6}, Case{5, 3, 2, 0.7}, Case{6, 3, 2, 0.5},
                 Case{6, 4, 2, 0.5}, Case{6, 4, 3, 0.6}, Case{7, 3, 2, 0.5}})
    for (int t = 0; t < 15; ++t) {
      Hypergraph h = random_k_graph(c.n, c.k, c.p, rng);
      auto order = l_hamiltonian_cycle(h, c.l);
      ASSERT_EQ(order.has_value(), brute_l_ham(h, c.k, c.l)) << c.n << " " << c.k << " " << c.l;
      if (order)
        for (Mask e : overlap_cycle_edges(*order, c.k, c.l)) EXPECT_TRUE(h.has_edge(e));
    }
}

TEST(OverlapCycleTest, CompleteHypergraphsAreHamiltonian) {
  for (int k = 3; k <= 4; ++k)
    for (int l = 1; l < k; ++l)
      for (int n = 2 * k - l; n <= 8; ++n) {
        if (n % (k - l) != 0) continue;
        std::mt19937_64 rng(0);
        Hypergraph full = random_k_graph(n, k, 1.0, rng);
        EXPECT_TRUE(is_l_hamiltonian(full, l)) << n << " " << k << " " << l;
      }
}

int brute_sat(int n, int k, int l) {
  std::vector<Mask> ksets;
  for (Mask s = 0; s < bit(n); ++s)
    if (popcount(s) == k) ksets.push_back(s);
  int best = -1;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << ksets.size()); ++code) {
    int m = popcount(code);
    if (best >= 0 && m >= best) continue;
    std::vector<Mask> edges;
    for_each_bit(code, [&](int i) { edges.push_back(ksets[i]); });
    Hypergraph h(n, edges, k);
    if (brute_l_ham(h, k, l)) continue;
    bool saturated = true;
    for (Mask e : ksets) {
      if (h.has_edge(e)) continue;
      Hypergraph plus = h;
      plus.add_edge(e);
      if (!brute_l_ham(plus, k, l)) {
        saturated = false;
        break;
      }
    }
    if (saturated) best = m;
  }
  return best;
}

TEST(SaturationTest, MatchesLabelledEnumeration) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(sat_search(n, 2, 1).edges, brute_sat(n, 2, 1)) << "n=" << n;
  EXPECT_EQ(sat_search(4, 3, 2).edges, brute_sat(4, 3, 2));
  EXPECT_EQ(sat_search(5, 3, 2).edges, brute_sat(5, 3, 2));
}

TEST(SaturationTest, WitnessIsSaturated) {
  for (int n = 5; n <= 7; ++n) {
    auto r = sat_search(n, 2, 1);
    ASSERT_GE(r.edges, 0);
    EXPECT_TRUE(is_l_ham_saturated(r.witness, 1));
    EXPECT_EQ(static_cast<int>(r.witness.edges().size()), r.edges);
    // Adding any missing edge to a saturated graph creates a Hamiltonian cycle.
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        Mask e = bit(u) | bit(v);
        if (r.witness.has_edge(e)) continue;
        Hypergraph plus = r.witness;
        plus.add_edge(e);
        EXPECT_TRUE(is_l_hamiltonian(plus, 1));
      }
  }
  auto t = sat_search(6, 3, 2);
  if (t.edges >= 0) EXPECT_TRUE(is_l_ham_saturated(t.witness, 2));
}

int brute_bipartization(const Graph& g) {
  const int n = g.order();
  int best = g.size();
  for (Mask side = 0; side < bit(n); ++side) {
    int inside = 0;
    for (auto [u, v] : g.edges()) inside += test(side, u) == test(side, v);
    best = std::min(best, inside);
  }
  return best;
}

TEST(BipartizationTest, Examples) {
  EXPECT_EQ(bipartization_cost(graphs::cycle(5)).deletions, 1);
  EXPECT_EQ(bipartization_cost(graphs::complete(4)).deletions, 2);
  auto b = bipartization_cost(graphs::blow_up(graphs::cycle(5), 2));
  EXPECT_EQ(b.deletions, 4);
  EXPECT_EQ(b.clique_number, 2);
  EXPECT_EQ(b.triangle_free_bound, Rational(4));
  EXPECT_EQ(bipartization_cost(graphs::petersen()).deletions, 3);
  EXPECT_EQ(bipartization_cost(Graph(0)).deletions, 0);
}

TEST(BipartizationTest, MatchesEnumerationAndBipartiteness) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_gnp(3 + t % 7, 0.45, rng);
    auto b = bipartization_cost(g);
    ASSERT_EQ(b.deletions, brute_bipartization(g));
    EXPECT_EQ(b.deletions == 0, is_bipartite(g));
    int inside = 0;
    for (auto [u, v] : g.edges()) inside += test(b.side, u) == test(b.side, v);
    EXPECT_EQ(inside, b.deletions);
  }
}

TEST(BipartizationTest, TriangleFreeBoundOnSmallGraphs) {
  // Every triangle-free graph on n <= 8 vertices meets the n^2/25 bound.
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : gen::generate_hereditary(n, [](const Graph& h) { return is_free_of(h, {graphs::cycle(3)}); }))
      EXPECT_LE(Rational(bipartization_cost(g).deletions), Rational(n * n, 25));
}

std::vector<int> random_colouring(int n, double p_red, std::mt19937_64& rng) {
  std::bernoulli_distribution red(p_red);
  std::vector<int> c(triple_count(n));
  for (auto& x : c) x = red(rng) ? 0 : 1;
  return c;
}

bool brute_red_triangle(int n, const std::vector<int>& c) {
  std::vector<Mask> red;
  for (Mask s = 0; s < bit(n); ++s)
    if (popcount(s) == 3) {
      auto v = bits_of(s);
      if (c[triple_index(n, v[0], v[1], v[2])] == 0) red.push_back(s);
    }
  for (Mask a : red)
    for (Mask b : red)
      for (Mask d : red)
        if (a != b && b != d && a != d && popcount(a & b) == 1 && popcount(b & d) == 1 && popcount(a & d) == 1 &&
            (a & b & d) == 0)
          return true;
  return false;
}

bool brute_blue_clique(int n, const std::vector<int>& c, int t) {
  for (Mask s = 0; s < bit(n); ++s) {
    if (popcount(s) != t) continue;
    auto v = bits_of(s);
    bool ok = true;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        for (std::size_t d = b + 1; d < v.size(); ++d) ok = ok && c[triple_index(n, v[a], v[b], v[d])] == 1;
    if (ok) return true;
  }
  return false;
}

TEST(HyperRamseyTest, TripleIndexIsABijection) {
  for (int n = 3; n <= 9; ++n) {
    std::vector<bool> seen(triple_count(n), false);
    for (int c = 2; c < n; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          int i = triple_index(n, c, a, b);
          ASSERT_FALSE(seen[i]);
          seen[i] = true;
        }
  }
  EXPECT_THROW(triple_index(5, 1, 1, 2), Error);
}

TEST(HyperRamseyTest, Extremes) {
  auto red = hyper_ramsey_witness(6, std::vector<int>(triple_count(6), 0), 4);
  ASSERT_EQ(red.kind, RamseyVerdict::Kind::kRedTriangle);
  Mask a = red.red_edges[0], b = red.red_edges[1], c = red.red_edges[2];
  EXPECT_EQ(popcount(a & b), 1);
  EXPECT_EQ(a & b & c, Mask{0});
  auto blue = hyper_ramsey_witness(7, std::vector<int>(triple_count(7), 1), 7);
  EXPECT_EQ(blue.kind, RamseyVerdict::Kind::kBlueClique);
  EXPECT_EQ(blue.blue_clique, low_mask(7));
  // Five points host no red loose triangle, which needs six.
  EXPECT_EQ(hyper_ramsey_witness(5, std::vector<int>(triple_count(5), 0), 4).kind, RamseyVerdict::Kind::kNone);
}

TEST(HyperRamseyTest, MatchesEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 6 + trial % 3, t = 3 + trial % 3;
    auto c = random_colouring(n, 0.08, rng);
    auto v = hyper_ramsey_witness(n, c, t);
    bool tri = brute_red_triangle(n, c);
    ASSERT_EQ(v.kind == RamseyVerdict::Kind::kRedTriangle, tri);
    if (!tri) EXPECT_EQ(v.kind == RamseyVerdict::Kind::kBlueClique, brute_blue_clique(n, c, t));
    if (v.kind == RamseyVerdict::Kind::kBlueClique) EXPECT_EQ(popcount(v.blue_clique), t);
  }
}

}  // namespace
}  // namespace iml::ext
