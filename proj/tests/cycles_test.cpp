#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "iml/core/error.hpp"
#include "iml/core/structure.hpp"
#include "iml/cycles/cycles.hpp"
#include "iml/gen/generate.hpp"
#include "oracles.hpp"

namespace iml::cycles {
namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Digraph random_tournament(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) d.add_arc(u, v);
      else d.add_arc(v, u);
    }
  return d;
}

bool cycle_contains_edge(const std::vector<int>& c, Edge e) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    int a = c[i], b = c[(i + 1) % n];
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return true;
  }
  return false;
}

std::vector<int> normalized(std::vector<int> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

TEST(CycleCountTest, Examples) {
  EXPECT_EQ(count_cycles_of_length(graphs::cycle(6), 6).count, 1);
  EXPECT_EQ(count_cycles_of_length(graphs::complete(4), 3).count, 4);
  EXPECT_EQ(count_cycles_of_length(graphs::petersen(), 5).count, 12);
  EXPECT_EQ(oracle::cycles_of_length(graphs::petersen(), 5), 12);
  EXPECT_EQ(count_cycles_of_length(graphs::petersen(), 2).count, 0);
}

TEST(CycleCountTest, MatchesSequenceEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(8, 0.5, rng);
    for (int len = 3; len <= 8; ++len)
      EXPECT_EQ(count_cycles_of_length(g, len).count, oracle::cycles_of_length(g, len));
    long long all = 0;
    for_each_cycle(g, [&](const std::vector<int>&) {
      ++all;
      return true;
    });
    long long sum = 0;
    for (int len = 3; len <= 8; ++len) sum += oracle::cycles_of_length(g, len);
    EXPECT_EQ(all, sum);
  }
}

TEST(CycleCountTest, HalfCycleMaximaAgreeWithOracle) {
  for (int n = 6; n <= 10; n += 2) {
    long long best = 0;
    for (const auto& g : gen::connected_cubic_graphs(n)) best = std::max(best, oracle::cycles_of_length(g, n / 2));
    EXPECT_EQ(max_half_cycles(n).max_count, best) << n;
  }
  EXPECT_EQ(max_half_cycles(4).max_count, 0);
}

TEST(HamiltonTest, Examples) {
  Graph k4 = graphs::complete(4);
  EXPECT_EQ(count_ham_cycles(k4), 3);
  for (auto [u, v] : k4.edges()) EXPECT_EQ(count_ham_through_edge(k4, u, v), 2);
  for (int n : {3, 5, 9}) {
    Graph c = graphs::cycle(n);
    EXPECT_EQ(count_ham_cycles(c), 1);
    EXPECT_EQ(count_ham_through_edge(c, 0, 1, HamMethod::kSearch), 1);
  }
  EXPECT_EQ(count_ham_cycles(graphs::petersen()), 0);
  EXPECT_EQ(count_ham_cycles(graphs::petersen(), HamMethod::kSearch), 0);
  try {
    count_ham_through_edge(graphs::cycle(5), 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdgeAbsent);
  }
}

TEST(HamiltonTest, RoutesAgreeWithPermutationScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + trial % 5;
    Graph g = random_graph(n, 0.6, rng);
    auto oracle = oracle::ham_by_permutations(g);
    EXPECT_EQ(count_ham_cycles(g, HamMethod::kSubsetDp), oracle.total);
    EXPECT_EQ(count_ham_cycles(g, HamMethod::kSearch), oracle.total);
    auto census = ham_census(g);
    BigInt sum = 0;
    for (size_t i = 0; i < census.edges.size(); ++i) {
      auto [u, v] = census.edges[i];
      EXPECT_EQ(census.per_edge[i], oracle.through[u][v]);
      EXPECT_EQ(count_ham_through_edge(g, u, v, HamMethod::kSubsetDp), oracle.through[u][v]);
      sum += census.per_edge[i];
    }
    EXPECT_EQ(sum, census.total * n);
  }
}

TEST(HamiltonTest, LargeCountsDoNotOverflow) {
  // (n-1)!/2 for K_n.
  BigInt expected = 1;
  for (int i = 2; i <= 15; ++i) expected *= i;
  EXPECT_EQ(count_ham_cycles(graphs::complete(16)), expected / 2);
}

TEST(SmithTest, Examples) {
  auto k4 = smith_parity_check(graphs::complete(4));
  EXPECT_TRUE(k4.all_even());
  for (const auto& c : k4.counts) EXPECT_EQ(c, 2);
  EXPECT_TRUE(smith_parity_check(graphs::prism(3)).all_even());
  auto pet = smith_parity_check(graphs::petersen());
  for (const auto& c : pet.counts) EXPECT_EQ(c, 0);
  EXPECT_THROW(smith_parity_check(graphs::cycle(5)), Error);
}

TEST(SmithTest, CubicGraphsUpToTwelve) {
  for (int n = 4; n <= 12; n += 2)
    for (const auto& g : gen::cubic_graphs(n)) EXPECT_TRUE(smith_parity_check(g).all_even());
}

void check_lollipop(const Graph& g) {
  std::vector<std::vector<int>> cycles;
  // Collect Hamilton cycles through brute force for comparison.
  int n = g.order();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    if (p[1] > p[n - 1]) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.has_edge(p[i], p[(i + 1) % n]);
    if (ok) cycles.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  ASSERT_FALSE(cycles.empty());
  for (const auto& start : cycles)
    for (int i = 0; i < n; ++i) {
      Edge e{start[i], start[(i + 1) % n]};
      auto trace = lollipop_walk(g, start, e);
      EXPECT_TRUE(is_hamiltonian_cycle(g, trace.end_cycle));
      EXPECT_NE(normalized(trace.end_cycle), normalized(start));
      EXPECT_TRUE(cycle_contains_edge(trace.end_cycle, e));
      EXPECT_GE(trace.steps, 1);
      EXPECT_NE(std::find(cycles.begin(), cycles.end(), normalized(trace.end_cycle)), cycles.end());
      auto back = lollipop_walk(g, trace.end_cycle, e);
      EXPECT_EQ(normalized(back.end_cycle), normalized(start));
      EXPECT_EQ(back.steps, trace.steps);
    }
}

TEST(LollipopTest, SmallCubicGraphs) {
  check_lollipop(graphs::complete(4));
  check_lollipop(graphs::prism(3));
  check_lollipop(graphs::complete_bipartite(3, 3));
}

TEST(LollipopTest, MobiusKantor) {
  Graph g = graphs::mobius_kantor();
  std::vector<int> ham;
  bool found = false;
  // First Hamilton cycle from a DFS; the graph is small enough.
  std::vector<int> path{0};
  auto rec = [&](auto&& self, Mask used) -> void {
    if (found) return;
    if (static_cast<int>(path.size()) == 16) {
      if (g.has_edge(path.back(), 0)) {
        ham = path;
        found = true;
      }
      return;
    }
    for (int w : g.neighbors(path.back()))
      if (!test(used, w)) {
        path.push_back(w);
        self(self, used | bit(w));
        path.pop_back();
      }
  };
  rec(rec, 1);
  ASSERT_TRUE(found);
  auto trace = lollipop_walk(g, ham, {ham[0], ham[1]});
  EXPECT_TRUE(is_hamiltonian_cycle(g, trace.end_cycle));
  EXPECT_NE(normalized(trace.end_cycle), normalized(ham));
  EXPECT_GE(trace.steps, 1);
}

TEST(LollipopTest, Errors) {
  try {
    lollipop_walk(graphs::cycle(4), {0, 1, 2, 3}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCubic);
  }
  try {
    lollipop_walk(graphs::complete(4), {0, 2, 1}, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHamiltonianCycle);
  }
  EXPECT_THROW(lollipop_walk(graphs::complete(4), {0, 1, 2, 3}, {0, 2}), Error);
}

TEST(CycleSpaceTest, Examples) {
  Graph k4 = graphs::complete(4);
  EXPECT_EQ(cycle_space_dimension(k4, 2), 3);
  EXPECT_EQ(cycle_space_dimension(k4, 3), 6);
  EXPECT_EQ(cycle_space_dimension(k4, 0), 6);
  EXPECT_EQ(cycle_space_dimension(graphs::cycle(5), 3), 1);
  EXPECT_EQ(cycle_space_dimension(graphs::path(4), 5), 0);
  EXPECT_THROW(cycle_space_dimension(graphs::empty(3), 2), Error);
  EXPECT_THROW(cycle_space_dimension(k4, 4), Error);
}

TEST(CycleSpaceTest, BinaryDimensionIsCyclomaticNumber) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(7, 0.5, rng);
    if (!is_connected(g)) continue;
    EXPECT_EQ(cycle_space_dimension(g, 2), g.size() - g.order() + 1);
  }
}

TEST(CycleSpaceTest, OddCharacteristicOnThreeEdgeConnected) {
  for (const auto& g : gen::connected_cubic_graphs(8))
    if (edge_connectivity(g) >= 3) {
      EXPECT_EQ(cycle_space_dimension(g, 3), g.size());
      EXPECT_EQ(cycle_space_dimension(g, 0), g.size());
    }
  // K_{2,3}: over GF(3) the three 4-cycles have rank 3 while |E| = 6.
  EXPECT_LT(cycle_space_dimension(graphs::complete_bipartite(2, 3), 3), 6);
}

TEST(CycleBasisTest, Verdicts) {
  for (Graph g : {graphs::complete(4), graphs::complete(5), graphs::prism(3), graphs::petersen()}) {
    auto attempt = explicit_cycle_basis(g, 3);
    ASSERT_EQ(attempt.cycles.size(), static_cast<size_t>(g.size()));
    auto es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
      const auto& c = attempt.cycles[i];
      EXPECT_EQ(c[0], es[i].first);
      EXPECT_EQ(c[1], es[i].second);
      for (size_t j = 0; j < c.size(); ++j) EXPECT_TRUE(g.has_edge(c[j], c[(j + 1) % c.size()]));
      std::vector<int> sorted = c;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
    }
    EXPECT_LE(attempt.rank, cycle_space_dimension(g, 3));
    EXPECT_EQ(attempt.independent, attempt.rank == g.size());
  }
  // K_4 has only four triangles, so six shortest cycles cannot be independent.
  EXPECT_FALSE(explicit_cycle_basis(graphs::complete(4), 3).independent);
  try {
    explicit_cycle_basis(graphs::cycle(5), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotThreeEdgeConnected);
  }
}

TEST(PathTest, Examples) {
  Digraph d = digraphs::directed_path(3);
  auto p = ham_path_xy(d, 0, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (std::vector<int>{0, 1, 2}));
  Digraph t = digraphs::transitive_tournament(4);
  EXPECT_FALSE(ham_path_xy(t, 3, 0).has_value());
  EXPECT_EQ(longest_xy_path(t, 3, 0).length, 0);
  EXPECT_TRUE(longest_xy_path(t, 3, 0).path.empty());
  EXPECT_EQ(longest_xy_path(t, 0, 3).length, 3);
  EXPECT_THROW(ham_path_xy(t, 1, 1), Error);
}

TEST(PathTest, RandomTournamentsMatchDfs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + trial % 4;
    Digraph d = random_tournament(n, rng);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        int best = oracle::longest_path_dfs(d, x, y);
        auto lp = longest_xy_path(d, x, y);
        EXPECT_EQ(lp.length, std::max(best, 0));
        if (best > 0) {
          ASSERT_EQ(static_cast<int>(lp.path.size()), best + 1);
          EXPECT_EQ(lp.path.front(), x);
          EXPECT_EQ(lp.path.back(), y);
          for (size_t i = 0; i + 1 < lp.path.size(); ++i) EXPECT_TRUE(d.has_arc(lp.path[i], lp.path[i + 1]));
        }
        EXPECT_EQ(ham_path_xy(d, x, y).has_value(), best == n - 1);
      }
  }
}

}  // namespace
}  // namespace iml::cycles
