#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/perc/perc.hpp"

namespace iml::perc {
namespace {

// Recount every vertex from scratch each round.
Closure naive(const Adjacency& g, const Rule& rule, std::vector<char> inf) {
  Closure out;
  const int n = static_cast<int>(g.size());
  while (true) {
    std::vector<char> next = inf;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      if (inf[v]) continue;
      int c = 0;
      for (int u : g[v]) c += inf[u];
      int deg = static_cast<int>(g[v].size());
      bool fire = rule.kind == Rule::Kind::kThreshold ? c >= rule.r : 2 * c > deg;
      if (fire) {
        next[v] = 1;
        changed = true;
      }
    }
    if (!changed) break;
    inf = next;
    ++out.rounds;
  }
  out.full = std::all_of(inf.begin(), inf.end(), [](char c) { return c != 0; });
  out.infected = inf;
  return out;
}

std::vector<char> random_set(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<char> s(n);
  for (auto& x : s) x = coin(rng);
  return s;
}

TEST(PercolateTest, Examples) {
  Adjacency p3 = adjacency(graphs::path(3));
  auto c = percolate(p3, Rule::strict_majority(), {1, 0, 1});
  EXPECT_TRUE(c.full);
  EXPECT_EQ(c.rounds, 1);
  Adjacency lonely = adjacency(Graph(2));
  auto d = percolate(lonely, Rule::strict_majority(), {1, 0});
  EXPECT_FALSE(d.full);
  EXPECT_EQ(d.infected[1], 0);
  EXPECT_EQ(needed(Rule::strict_majority(), 0), -1);
  EXPECT_EQ(needed(Rule::strict_majority(), 4), 3);
  EXPECT_EQ(needed(Rule::strict_majority(), 3), 2);
  // A diagonal of the grid fills the whole square under the 2-neighbour rule.
  std::vector<char> diag(64, 0);
  for (int i = 0; i < 8; ++i) diag[i * 8 + i] = 1;
  auto g = percolate(grid(8), Rule::threshold(2), diag);
  EXPECT_TRUE(g.full);
  EXPECT_EQ(g.rounds, 7);
}

TEST(PercolateTest, MatchesNaiveSimulator) {
  std::mt19937_64 rng(13);
  std::vector<Adjacency> graphs_ = {grid(8), torus(6), adjacency(graphs::petersen()), random_regular(30, 4, 2),
                                    complete(9)};
  for (int t = 0; t < 20; ++t) graphs_.push_back(adjacency(random_gnp(20, 0.2, rng)));
  for (const auto& g : graphs_)
    for (Rule rule : {Rule::strict_majority(), Rule::threshold(2), Rule::threshold(3)})
      for (double p : {0.1, 0.2, 0.4}) {
        auto start = random_set(static_cast<int>(g.size()), p, rng);
        auto a = percolate(g, rule, start), b = naive(g, rule, start);
        ASSERT_EQ(a.infected, b.infected);
        EXPECT_EQ(a.rounds, b.rounds);
        EXPECT_EQ(a.full, b.full);
      }
}

TEST(PercolateTest, MonotoneAndIdempotent) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    Adjacency g = t % 2 ? grid(10) : random_regular(40, 4, static_cast<std::uint64_t>(t));
    Rule rule = t % 3 ? Rule::threshold(2) : Rule::strict_majority();
    auto small = random_set(static_cast<int>(g.size()), 0.1, rng);
    auto big = small;
    for (auto& x : big)
      if (!x && rng() % 5 == 0) x = 1;
    auto a = percolate(g, rule, small), b = percolate(g, rule, big);
    for (std::size_t v = 0; v < g.size(); ++v) EXPECT_LE(a.infected[v], b.infected[v]);
    auto again = percolate(g, rule, a.infected);
    EXPECT_EQ(again.infected, a.infected);
    EXPECT_EQ(again.rounds, 0);
  }
}

TEST(PercolateTest, CompleteGraphClosesInOneRound) {
  const int n = 11;
  Adjacency k = complete(n);
  for (int a = 0; a <= n; ++a) {
    std::vector<char> s(n, 0);
    std::fill(s.begin(), s.begin() + a, 1);
    auto c = percolate(k, Rule::strict_majority(), s);
    bool expected = a == n || 2 * a > n - 1;
    EXPECT_EQ(c.full, expected) << a;
    EXPECT_LE(c.rounds, 1);
  }
}

TEST(RandomRegularTest, IsSimpleAndRegular) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_regular(50, 4, seed);
    for (int v = 0; v < 50; ++v) {
      ASSERT_EQ(g[v].size(), 4u);
      std::set<int> nb(g[v].begin(), g[v].end());
      EXPECT_EQ(nb.size(), 4u);
      EXPECT_FALSE(nb.count(v));
      for (int u : g[v]) EXPECT_NE(std::find(g[u].begin(), g[u].end(), v), g[u].end());
    }
  }
  EXPECT_EQ(random_regular(20, 3, 7), random_regular(20, 3, 7));
  EXPECT_THROW(random_regular(5, 3, 1), Error);
  EXPECT_THROW(family("hypercube", 4, 1), Error);
  EXPECT_EQ(family("random-regular-4", 12, 3), random_regular(12, 4, 3));
}

TEST(EstimateTest, WilsonInterval) {
  Estimate e;
  e.trials = 100;
  e.successes = 50;
  wilson_interval(e);
  EXPECT_NEAR(e.ci_lo, 0.4038, 1e-3);
  EXPECT_NEAR(e.ci_hi, 0.5962, 1e-3);
  e.successes = 0;
  wilson_interval(e);
  EXPECT_EQ(e.ci_lo, 0.0);
  EXPECT_GT(e.ci_hi, 0.0);
}

TEST(EstimateTest, Extremes) {
  Adjacency g = grid(6);
  EXPECT_EQ(estimate_full_infection(g, 1.0, Rule::threshold(2), 50, 1).estimate, 1.0);
  EXPECT_EQ(estimate_full_infection(g, 0.0, Rule::threshold(2), 50, 1).estimate, 0.0);
  EXPECT_THROW(estimate_full_infection(g, 1.5, Rule::threshold(2), 50, 1), Error);
  EXPECT_THROW(estimate_full_infection(g, 0.5, Rule::threshold(2), 0, 1), Error);
}

TEST(SweepTest, AgreesWithPointEstimates) {
  Adjacency g = grid(12);
  auto grid_points = linear_grid(0.04, 0.3, 9);
  auto sweep = threshold_sweep(g, grid_points, Rule::threshold(2), 300, 99);
  ASSERT_EQ(sweep.points.size(), grid_points.size());
  for (std::size_t j = 0; j < grid_points.size(); ++j) {
    auto e = estimate_full_infection(g, grid_points[j], Rule::threshold(2), 300, 99);
    EXPECT_EQ(sweep.points[j].successes, e.successes) << grid_points[j];
    if (j > 0) EXPECT_LE(sweep.points[j - 1].successes, sweep.points[j].successes);
  }
  ASSERT_TRUE(sweep.p_half.has_value());
  EXPECT_GT(*sweep.p_half, grid_points.front());
  EXPECT_LT(*sweep.p_half, grid_points.back());
  auto again = threshold_sweep(g, grid_points, Rule::threshold(2), 300, 99);
  for (std::size_t j = 0; j < grid_points.size(); ++j) EXPECT_EQ(again.points[j].successes, sweep.points[j].successes);
  EXPECT_THROW(threshold_sweep(g, {0.2, 0.1}, Rule::threshold(2), 10, 1), Error);
}

TEST(SweepTest, CompleteGraphJumpsNearOneHalf) {
  auto sweep = threshold_sweep(complete(201), linear_grid(0.3, 0.7, 9), Rule::strict_majority(), 400, 3);
  EXPECT_LT(sweep.points[2].estimate, 0.05);  // p = 0.4
  EXPECT_GT(sweep.points[6].estimate, 0.95);  // p = 0.6
  ASSERT_TRUE(sweep.p_half.has_value());
  EXPECT_NEAR(*sweep.p_half, 0.5, 0.03);
}

TEST(SweepTest, HalfPointFallsWithGridSize) {
  auto grid_points = linear_grid(0.02, 0.2, 19);
  double prev = 1.0;
  for (int side : {16, 32, 64}) {
    auto s = threshold_sweep(grid(side), grid_points, Rule::threshold(2), 200, 7);
    ASSERT_TRUE(s.p_half.has_value());
    EXPECT_LT(*s.p_half, prev) << side;
    prev = *s.p_half;
  }
  EXPECT_NEAR(holroyd_reference(64), 0.1318, 1e-3);
}

}  // namespace
}  // namespace iml::perc
