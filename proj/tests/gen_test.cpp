#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/core/structure.hpp"
#include "iml/gen/canonical.hpp"
#include "iml/gen/generate.hpp"
#include "oracles.hpp"

namespace iml::gen {
namespace {

// Orbit counting over S_n. A permutation fixes 2^(orbits on pairs) graphs;
// for tournaments, a pair orbit that maps some (u,v) onto (v,u) fixes nothing.
struct BurnsideCounts {
  BigInt graphs = 0;
  BigInt tournaments = 0;
};

BurnsideCounts burnside(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt g_sum = 0, t_sum = 0, perms = 0;
  do {
    ++perms;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    int orbits = 0;
    bool flips = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (seen[u][v]) continue;
        ++orbits;
        int a = u, b = v;
        while (!seen[a][b]) {
          seen[a][b] = seen[b][a] = true;
          int na = p[a], nb = p[b];
          if (na == v && nb == u) flips = true;
          a = na;
          b = nb;
        }
        if (a == v && b == u) flips = true;
      }
    BigInt fixed = BigInt(1) << orbits;
    g_sum += fixed;
    if (!flips) t_sum += fixed;
  } while (std::next_permutation(p.begin(), p.end()));
  return {g_sum / perms, t_sum / perms};
}

TEST(GenerateTest, GraphCountsMatchOrbitCounting) {
  for (int n = 1; n <= 7; ++n) {
    GenSpec spec;
    spec.n = n;
    auto graphs = generate_graphs(spec);
    std::set<std::string> certs;
    for (const auto& g : graphs) certs.insert(canonical_form(g).certificate);
    EXPECT_EQ(certs.size(), graphs.size()) << "n=" << n;
    EXPECT_EQ(BigInt(graphs.size()), burnside(n).graphs) << "n=" << n;
  }
}

TEST(GenerateTest, TournamentCountsMatchOrbitCounting) {
  for (int n = 1; n <= 6; ++n) {
    GenSpec spec;
    spec.n = n;
    spec.kind = GraphClass::kTournament;
    auto ts = generate_tournaments(spec);
    std::set<std::string> certs;
    for (const auto& t : ts) {
      EXPECT_TRUE(t.is_tournament());
      certs.insert(canonical_form(t).certificate);
    }
    EXPECT_EQ(certs.size(), ts.size());
    EXPECT_EQ(BigInt(ts.size()), burnside(n).tournaments) << "n=" << n;
  }
}

TEST(GenerateTest, FourVertexTournamentsByOrientation) {
  std::set<std::string> classes;
  const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int code = 0; code < 64; ++code) {
    Digraph d(4);
    for (int i = 0; i < 6; ++i) {
      auto [u, v] = pairs[i];
      if (code >> i & 1) d.add_arc(u, v);
      else d.add_arc(v, u);
    }
    classes.insert(canonical_form(d).certificate);
  }
  GenSpec spec;
  spec.n = 4;
  spec.kind = GraphClass::kTournament;
  EXPECT_EQ(classes.size(), 4u);
  EXPECT_EQ(generate_tournaments(spec).size(), 4u);
}

TEST(GenerateTest, RegularTournaments) {
  GenSpec spec;
  spec.kind = GraphClass::kRegularTournament;
  const int expected[] = {1, 1, 3};
  for (int i = 0; i < 3; ++i) {
    spec.n = 3 + 2 * i;
    auto ts = generate_tournaments(spec);
    EXPECT_EQ(ts.size(), static_cast<size_t>(expected[i])) << "n=" << spec.n;
    for (const auto& t : ts) EXPECT_TRUE(t.is_regular_tournament());
  }
  spec.n = 4;
  EXPECT_THROW(generate_tournaments(spec), Error);
}

TEST(GenerateTest, CubicCounts) {
  auto k4 = connected_cubic_graphs(4);
  ASSERT_EQ(k4.size(), 1u);
  EXPECT_EQ(k4[0].size(), 6);
  const int connected[] = {1, 2, 5, 19, 85};
  const int all[] = {1, 2, 6, 21, 94};
  for (int i = 0; i < 5; ++i) {
    int n = 4 + 2 * i;
    auto cc = connected_cubic_graphs(n);
    EXPECT_EQ(cc.size(), static_cast<size_t>(connected[i])) << "n=" << n;
    EXPECT_EQ(cubic_graphs(n).size(), static_cast<size_t>(all[i])) << "n=" << n;
    std::set<std::string> certs;
    for (const auto& g : cc) {
      EXPECT_EQ(g.min_degree(), 3);
      EXPECT_EQ(g.max_degree(), 3);
      EXPECT_TRUE(is_connected(g));
      certs.insert(canonical_form(g).certificate);
    }
    EXPECT_EQ(certs.size(), cc.size());
  }
}

TEST(GenerateTest, ConnectedCubicTenByFilteringSubcubicGraphs) {
  // Independent route: vertex augmentation over graphs with maximum degree 3,
  // keeping the connected 3-regular ones.
  GenSpec spec;
  spec.n = 10;
  spec.max_degree = 3;
  spec.min_degree = 3;
  spec.connectivity = 1;
  auto filtered = generate_graphs(spec);
  std::set<std::string> a, b;
  for (const auto& g : filtered) a.insert(canonical_form(g).certificate);
  for (const auto& g : connected_cubic_graphs(10)) b.insert(canonical_form(g).certificate);
  EXPECT_EQ(a.size(), 19u);
  EXPECT_EQ(a, b);
}

TEST(GenerateTest, EmittedGraphsSatisfyTheirSpec) {
  std::vector<GenSpec> specs(4);
  specs[0].n = 6;
  specs[0].min_degree = 2;
  specs[0].connectivity = 2;
  specs[1].n = 7;
  specs[1].bipartite = true;
  specs[2].n = 8;
  specs[2].regular = 4;
  specs[3].n = 8;
  specs[3].kind = GraphClass::kCubic;
  specs[3].connectivity = 3;
  for (const auto& spec : specs) {
    auto graphs = generate_graphs(spec);
    EXPECT_FALSE(graphs.empty());
    for (const auto& g : graphs) {
      EXPECT_TRUE(satisfies(g, spec));
      EXPECT_GE(g.min_degree(), spec.min_degree);
      if (spec.bipartite) EXPECT_TRUE(is_bipartite(g));
      if (spec.connectivity > 0) EXPECT_GE(oracle::vertex_connectivity(g), spec.connectivity);
    }
  }
}

TEST(GenerateTest, DeterministicOrder) {
  GenSpec spec;
  spec.n = 6;
  EXPECT_EQ(generate_lines(spec), generate_lines(spec));
  auto lines = generate_lines(spec);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(GenerateTest, UnsatisfiableSpecs) {
  GenSpec odd_cubic;
  odd_cubic.n = 7;
  odd_cubic.kind = GraphClass::kCubic;
  EXPECT_THROW(generate_graphs(odd_cubic), Error);
  GenSpec degrees;
  degrees.n = 5;
  degrees.min_degree = 3;
  degrees.max_degree = 2;
  EXPECT_THROW(generate_graphs(degrees), Error);
  GenSpec odd_regular;
  odd_regular.n = 5;
  odd_regular.regular = 3;
  EXPECT_THROW(generate_graphs(odd_regular), Error);
  GenSpec big;
  big.n = 10;
  big.kind = GraphClass::kTournament;
  EXPECT_THROW(generate_tournaments(big), Error);
}

TEST(GenerateTest, SpecJson) {
  auto spec = spec_from_json(nlohmann::json::parse(R"({"n": 8, "class": "cubic", "connectivity": 2})"));
  EXPECT_EQ(spec.n, 8);
  EXPECT_EQ(spec.kind, GraphClass::kCubic);
  EXPECT_EQ(spec_from_json(to_json(spec)).connectivity, 2);
  try {
    spec_from_json(nlohmann::json::parse(R"({"n": 8, "class": "planar"})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParams);
  }
  EXPECT_THROW(spec_from_json(nlohmann::json::parse(R"({"class": "graph"})")), Error);
}

TEST(GenerateTest, MaxAutomorphismsOfThreeConnectedCubic) {
  EXPECT_EQ(max_aut_3connected_cubic(4).max_order, 24);
  auto six = max_aut_3connected_cubic(6);
  EXPECT_EQ(six.max_order, 72);
  ASSERT_EQ(six.witnesses.size(), 1u);
  EXPECT_TRUE(is_bipartite(six.witnesses[0]));

  long long best = 0;
  for (const auto& g : connected_cubic_graphs(8))
    if (oracle::vertex_connectivity(g) == 3) best = std::max(best, oracle::automorphism_count(g));
  EXPECT_EQ(max_aut_3connected_cubic(8).max_order, best);
}

TEST(GenerateTest, CyclicEdgeConnectivity) {
  EXPECT_TRUE(is_cyclically_k_edge_connected(graphs::petersen(), 4));
  EXPECT_TRUE(is_cyclically_k_edge_connected(graphs::petersen(), 5));
  EXPECT_FALSE(is_cyclically_k_edge_connected(graphs::prism(3), 4));
  EXPECT_TRUE(is_cyclically_k_edge_connected(graphs::prism(3), 3));
  EXPECT_TRUE(is_cyclically_k_edge_connected(graphs::prism(5), 4));
  EXPECT_FALSE(is_cyclically_k_edge_connected(graphs::prism(5), 5));
  EXPECT_TRUE(is_cyclically_k_edge_connected(graphs::complete_bipartite(3, 3), 4));
}

TEST(GenerateTest, DiamondChainGraphsAreReached) {
  // Two branch vertices joined by three single-diamond chains: no edge of
  // this graph can be removed by the inverse of edge insertion.
  Graph g(14);
  int next = 2;
  for (int chain = 0; chain < 3; ++chain) {
    int a = next, b = next + 1, c = next + 2, d = next + 3;
    next += 4;
    for (auto [u, v] : {std::pair{a, b}, {a, c}, {b, c}, {b, d}, {c, d}}) g.add_edge(u, v);
    g.add_edge(0, a);
    g.add_edge(d, 1);
  }
  std::string cert = canonical_form(g).certificate;
  bool found = false;
  for (const auto& h : connected_cubic_graphs(14)) found |= canonical_form(h).certificate == cert;
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace iml::gen
