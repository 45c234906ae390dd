#include <algorithm>
#include <numeric>

#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/cycles/cycles.hpp"
#include "iml/gen/generate.hpp"
#include "iml/tournaments/tournaments.hpp"
#include "problems.hpp"

namespace iml::cli::detail {

namespace {

std::vector<Digraph> tournaments_of_order(int n) {
  gen::GenSpec s;
  s.n = n;
  s.kind = gen::GraphClass::kTournament;
  return gen::generate_tournaments(s);
}

json cycles_json(const std::vector<std::vector<int>>& cycles) {
  json out = json::array();
  for (const auto& c : cycles) out.push_back(c);
  return out;
}

}  // namespace

void add_digraph_problems(std::vector<ProblemEntry>& out) {
  const std::string seminar = "2014-01-16";

  out.push_back({"digraphs.kelly", seminar, "digraphs", "exact",
                 "Hamilton decompositions of every regular tournament on n vertices",
                 {int_param("n", 7, 1, 9, "odd order")},
                 [](const json& p, std::uint64_t) {
                   gen::GenSpec s;
                   s.n = geti(p, "n");
                   s.kind = gen::GraphClass::kRegularTournament;
                   long long count = 0, done = 0;
                   json example;
                   for (const auto& t : gen::generate_tournaments(s)) {
                     ++count;
                     auto dec = tour::kelly_decomposition(t);
                     if (dec && tour::verify_kelly(t, *dec)) {
                       ++done;
                       if (example.is_null()) example = {{"tournament", digraph_json(t)}, {"cycles", cycles_json(*dec)}};
                     }
                   }
                   return json{{"regular_tournaments", count}, {"decomposed", done}, {"example", example}};
                 }});

  out.push_back({"digraphs.strong-decomposition", seminar, "digraphs", "exact",
                 "k-arc-strong tournaments split into k arc-disjoint strong spanning subdigraphs",
                 {int_param("n", 6, 2, 8, "order"), int_param("k", 2, 1, 3, "arc-strong connectivity")},
                 [](const json& p, std::uint64_t) {
                   const int k = geti(p, "k");
                   long long count = 0, done = 0;
                   json failure;
                   for (const auto& t : tournaments_of_order(geti(p, "n"))) {
                     if (!tour::is_k_arc_strong(t, k)) continue;
                     ++count;
                     auto dec = tour::decompose_arc_disjoint_strong(t, k);
                     if (dec && tour::verify_decomposition(t, *dec)) ++done;
                     else if (failure.is_null()) failure = digraph_json(t);
                   }
                   return json{{"k_arc_strong", count}, {"decomposed", done}, {"first_failure", failure}};
                 }});

  out.push_back({"digraphs.two-hamilton-cycles", seminar, "digraphs", "exact",
                 "3-strong tournaments with two arc-disjoint Hamilton cycles",
                 {int_param("n", 7, 4, 8, "order")},
                 [](const json& p, std::uint64_t) {
                   long long count = 0, found = 0;
                   json failure;
                   for (const auto& t : tournaments_of_order(geti(p, "n"))) {
                     if (!tour::is_k_strong(t, 3)) continue;
                     ++count;
                     if (tour::two_arc_disjoint_hamilton_cycles(t)) ++found;
                     else if (failure.is_null()) failure = digraph_json(t);
                   }
                   return json{{"three_strong", count}, {"with_two_cycles", found}, {"first_failure", failure}};
                 }});

  out.push_back({"digraphs.arc-strong-split", seminar, "digraphs", "scan",
                 "random K-arc-strong digraphs split into two arc-disjoint strong spanning subdigraphs",
                 {int_param("n", 6, 3, 8, "order"), int_param("K", 3, 1, 5, "arc-strong connectivity"),
                  real_param("density", 0.75, 0, 1, "arc probability"), int_param("samples", 200, 1, 100000, "digraphs")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.arc-strong-split");
                   const int K = geti(p, "K");
                   long long qualifying = 0, split = 0;
                   json failure;
                   for (int i = 0; i < geti(p, "samples"); ++i) {
                     Digraph d = random_digraph(geti(p, "n"), getd(p, "density"), rng);
                     if (!tour::is_k_arc_strong(d, K)) continue;
                     ++qualifying;
                     auto dec = tour::decompose_arc_disjoint_strong(d, 2);
                     if (dec && tour::verify_decomposition(d, *dec)) ++split;
                     else if (failure.is_null()) failure = digraph_json(d);
                   }
                   return json{{"k_arc_strong", qualifying}, {"split", split}, {"first_failure", failure}};
                 }});

  out.push_back({"digraphs.disjoint-cycles", seminar, "digraphs", "scan",
                 "digraphs with minimum out-degree 2k-1 contain k disjoint cycles",
                 {int_param("n", 8, 2, 14, "order"), int_param("k", 2, 1, 4, "cycles"),
                  int_param("samples", 200, 1, 100000, "digraphs")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.disjoint-cycles");
                   const int n = geti(p, "n"), k = geti(p, "k"), deg = 2 * k - 1;
                   if (deg > n - 1) fail(ErrorCode::kBadParams, "need n >= 2k");
                   long long found = 0;
                   json failure;
                   std::vector<int> others(n - 1);
                   for (int i = 0; i < geti(p, "samples"); ++i) {
                     Digraph d(n);
                     for (int v = 0; v < n; ++v) {
                       std::iota(others.begin(), others.end(), 0);
                       for (int& x : others) x += x >= v;
                       std::shuffle(others.begin(), others.end(), rng);
                       for (int j = 0; j < deg; ++j) d.add_arc(v, others[j]);
                     }
                     if (tour::disjoint_cycles(d, k)) ++found;
                     else if (failure.is_null()) failure = digraph_json(d);
                   }
                   return json{{"samples", geti(p, "samples")}, {"with_k_disjoint_cycles", found}, {"first_failure", failure}};
                 }});

  out.push_back({"digraphs.rooted-partition", seminar, "digraphs", "scan",
                 "vertex partitions of tournaments into k-strong parts containing prescribed roots",
                 {int_param("n", 8, 2, 12, "order"), int_param("parts", 2, 1, 4, "number of parts"),
                  int_param("k", 1, 1, 3, "strong connectivity of each part"), int_param("samples", 50, 1, 10000, "tournaments")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.rooted-partition");
                   const int n = geti(p, "n"), parts = geti(p, "parts"), k = geti(p, "k");
                   if (parts > n) fail(ErrorCode::kBadParams, "more parts than vertices");
                   std::vector<int> roots(parts);
                   std::iota(roots.begin(), roots.end(), 0);
                   long long free_ok = 0, rooted_ok = 0, strong_enough = 0;
                   for (int i = 0; i < geti(p, "samples"); ++i) {
                     Digraph t = random_tournament(n, rng);
                     bool f = tour::partition_into_k_strong(t, parts, k).has_value();
                     bool r = tour::partition_into_k_strong(t, parts, k, roots).has_value();
                     free_ok += f;
                     rooted_ok += r;
                     strong_enough += tour::is_k_strong(t, k);
                   }
                   return json{{"samples", geti(p, "samples")}, {"k_strong", strong_enough}, {"partition", free_ok},
                               {"rooted_partition", rooted_ok}};
                 }});

  out.push_back({"digraphs.two-factor-directed-cycle", seminar, "digraphs", "scan",
                 "2-factors of the underlying graph whose first cycle is a directed cycle",
                 {int_param("n", 6, 3, 12, "order"), real_param("density", 0.4, 0, 1, "arc probability"),
                  int_param("samples", 100, 1, 10000, "digraphs")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.two-factor-directed-cycle");
                   long long found = 0;
                   json example;
                   for (int i = 0; i < geti(p, "samples"); ++i) {
                     Digraph d = random_digraph(geti(p, "n"), getd(p, "density"), rng);
                     if (auto f = tour::two_factor_one_directed(d)) {
                       ++found;
                       if (example.is_null()) example = {{"digraph", digraph_json(d)}, {"cycles", cycles_json(*f)}};
                     }
                   }
                   return json{{"samples", geti(p, "samples")}, {"found", found}, {"example", example}};
                 }});

  out.push_back({"digraphs.coloured-matchings", seminar, "digraphs", "scan",
                 "two edge-disjoint perfect matchings in a 2-edge-coloured bipartite graph, the first in colour 1",
                 {int_param("side", 4, 1, 8, "vertices per side"), real_param("density", 0.6, 0, 1, "edge probability"),
                  int_param("samples", 100, 1, 10000, "graphs")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.coloured-matchings");
                   std::bernoulli_distribution edge(getd(p, "density")), colour(0.5);
                   long long found = 0;
                   for (int i = 0; i < geti(p, "samples"); ++i) {
                     tour::ColouredBipartite b;
                     b.left = b.right = geti(p, "side");
                     for (int u = 0; u < b.left; ++u)
                       for (int v = 0; v < b.right; ++v)
                         if (edge(rng)) b.edges.push_back({u, v, colour(rng) ? 1 : 2});
                     found += tour::colored_two_matchings(b).has_value();
                   }
                   return json{{"samples", geti(p, "samples")}, {"found", found}};
                 }});

  out.push_back({"digraphs.xy-paths", "2014-04-16", "digraphs", "exact",
                 "longest and Hamiltonian (x, y)-paths in a random tournament",
                 {int_param("n", 8, 2, 20, "order"), int_param("x", 0, 0, 19, "start"), int_param("y", 1, 0, 19, "end")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.xy-paths");
                   const int n = geti(p, "n"), x = geti(p, "x"), y = geti(p, "y");
                   if (x >= n || y >= n || x == y) fail(ErrorCode::kBadParams, "x and y must be distinct vertices");
                   Digraph t = random_tournament(n, rng);
                   auto longest = cycles::longest_xy_path(t, x, y);
                   auto ham = cycles::ham_path_xy(t, x, y);
                   return json{{"tournament", digraph_json(t)}, {"longest_length", longest.length},
                               {"longest_path", longest.path}, {"hamiltonian", ham.has_value()}};
                 }});

  out.push_back({"digraphs.path-mergeable", "2014-04-16", "digraphs", "exact",
                 "path-mergeability and Hamilton paths of a random digraph",
                 {int_param("n", 6, 1, 12, "order"), real_param("density", 0.4, 0, 1, "arc probability")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.path-mergeable");
                   Digraph d = random_digraph(geti(p, "n"), getd(p, "density"), rng);
                   auto pm = tour::pm_ham_path(d);
                   json path = pm.path ? json(*pm.path) : json();
                   return json{{"digraph", digraph_json(d)}, {"path_mergeable", tour::is_path_mergeable(d)},
                               {"has_cutvertex", tour::has_cutvertex(d)}, {"hamilton_path", path},
                               {"strong_components", cycles_json(pm.strong_components)}};
                 }});

  out.push_back({"digraphs.spanning-degree", "2014-04-29", "digraphs", "exact",
                 "fewest arcs of spanning subdigraphs with semi-degree k and with arc-strong connectivity k",
                 {int_param("n", 7, 3, 9, "order"), int_param("k", 1, 1, 3, "degree / connectivity")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.spanning-degree");
                   const int n = geti(p, "n"), k = geti(p, "k");
                   if (n < 2 * k + 1) fail(ErrorCode::kBadParams, "need n >= 2k + 1");
                   Digraph t = random_tournament(n, rng);
                   for (int tries = 0; tries < 1000 && !tour::is_k_arc_strong(t, k); ++tries) t = random_tournament(n, rng);
                   if (!tour::is_k_arc_strong(t, k)) fail(ErrorCode::kBadParams, "no k-arc-strong tournament drawn");
                   auto a = tour::alpha_k(t, k);
                   auto b = tour::beta_k(t, k);
                   return json{{"tournament", digraph_json(t)}, {"alpha", a ? json(a->arcs) : json()}, {"beta", b.arcs},
                               {"lower_bound", n * k}};
                 }});

  out.push_back({"digraphs.reversal-numbers", "2014-04-29", "digraphs", "exact",
                 "fewest arc reversals giving semi-degree k and giving arc-strong connectivity k",
                 {int_param("n", 7, 3, 9, "order"), int_param("k", 1, 1, 3, "target")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "digraphs.reversal-numbers");
                   const int n = geti(p, "n"), k = geti(p, "k");
                   if (n < 2 * k + 1) fail(ErrorCode::kBadParams, "need n >= 2k + 1");
                   Digraph t = random_tournament(n, rng);
                   auto deg = tour::reversal_deg(t, k);
                   auto strong = tour::reversal_arc_strong(t, k);
                   return json{{"tournament", digraph_json(t)},
                               {"reversals_degree", deg.achieved ? json(deg.reversed.size()) : json()},
                               {"reversals_arc_strong", strong.achieved ? json(strong.reversed.size()) : json()}};
                 }});
}

}  // namespace iml::cli::detail
