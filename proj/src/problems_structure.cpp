#include <algorithm>
#include <numeric>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/core/io.hpp"
#include "iml/core/structure.hpp"
#include "iml/cycles/cycles.hpp"
#include "iml/designs/designs.hpp"
#include "iml/extremal/extremal.hpp"
#include "iml/families/families.hpp"
#include "iml/gen/generate.hpp"
#include "iml/gl2/gl2.hpp"
#include "iml/perc/perc.hpp"
#include "problems.hpp"

namespace iml::cli::detail {

namespace {

// "C4,K4,P5": cycles, complete graphs and paths by order.
std::vector<Graph> parse_forbidden(const std::string& spec) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    std::string tok = spec.substr(start, end - start);
    start = end + 1;
    if (tok.size() < 2) fail(ErrorCode::kBadParams, "forbidden graphs look like C4,K4,P5");
    int k = 0;
    try {
      k = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      fail(ErrorCode::kBadParams, "bad forbidden graph " + tok);
    }
    if (k < 1 || k > 10) fail(ErrorCode::kBadParams, "forbidden graphs have 1..10 vertices");
    if (tok[0] == 'C' && k >= 3) out.push_back(graphs::cycle(k));
    else if (tok[0] == 'K') out.push_back(graphs::complete(k));
    else if (tok[0] == 'P') out.push_back(graphs::path(k));
    else fail(ErrorCode::kBadParams, "bad forbidden graph " + tok);
  }
  return out;
}

long long katona_bound(int n, int k) {
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return 0LL;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  long long s = 0;
  int t = (n + k + 1) / 2;
  for (int j = t; j <= n; ++j) s += binom(n, j);
  if ((n + k) % 2) s += binom(n - 1, t - 1);
  return s;
}

long long milner_bound(int n, int k) {
  int t = (n + k + 1) / 2;
  long long r = 1;
  for (int i = 1; i <= t; ++i) r = r * (n - t + i) / i;
  return r;
}

json family_json(const std::vector<Mask>& f, int n) {
  json out = json::array();
  for (Mask s : f) out.push_back(fam::subset_string(s, n));
  return out;
}

json hyperedges_json(const Hypergraph& h) {
  json out = json::array();
  for (Mask e : h.edges()) out.push_back(bits_of(e));
  return out;
}

}  // namespace

void add_structure_problems(std::vector<ProblemEntry>& out) {
  out.push_back({"matroids.cyclic-base-ordering", "2014-02-06", "matroids", "exact",
                 "cyclic orderings of k disjoint spanning trees in which every window is a base",
                 {int_param("n", 5, 2, 8, "vertices"), int_param("k", 2, 1, 4, "spanning trees"),
                  bool_param("block", false, "each tree must also occupy a consecutive arc")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "matroids.cyclic-base-ordering");
                   const int n = geti(p, "n"), k = geti(p, "k");
                   std::vector<std::pair<int, int>> edges;
                   std::vector<std::vector<int>> bases;
                   std::vector<int> order(n);
                   for (int t = 0; t < k; ++t) {
                     std::iota(order.begin(), order.end(), 0);
                     std::shuffle(order.begin(), order.end(), rng);
                     bases.emplace_back();
                     for (int i = 1; i < n; ++i) {
                       bases.back().push_back(static_cast<int>(edges.size()));
                       edges.push_back({order[i], order[rng() % static_cast<unsigned>(i)]});
                     }
                   }
                   auto m = des::graphic_matroid(n, edges);
                   auto ord = des::cyclic_base_ordering(m, bases, p.at("block").get<bool>());
                   return json{{"edges", edges}, {"bases", bases}, {"ordering", ord ? json(*ord) : json()}};
                 }});

  out.push_back({"families.independence-width", "2014-02-06", "set families", "exact",
                 "width of the independence complex against its largest layer",
                 {string_param("graph", "path", "path | cycle | complete | star | petersen | prism | random | graph6:<code>"),
                  int_param("n", 10, 1, 22, "order"), real_param("p", 0.3, 0, 1, "edge probability for random")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "families.independence-width");
                   Graph g = named_graph(gets(p, "graph"), geti(p, "n"), getd(p, "p"), rng);
                   auto w = fam::width_independence_complex(g);
                   return json{{"graph", graph_json(g)}, {"width", w.width}, {"max_layer", w.max_layer},
                               {"layers", fam::layer_profile(g)}};
                 }});

  out.push_back({"families.independence-width-random", "2014-02-06", "set families", "monte-carlo",
                 "width over largest layer for independence complexes of G(n, c/n)",
                 {int_param("n", 14, 1, 20, "order"), real_param("c", 1.0, 0, 20, "average degree"),
                  int_param("trials", 20, 1, 10000, "samples")},
                 [](const json& p, std::uint64_t seed) {
                   auto e = fam::random_graph_width(geti(p, "n"), getd(p, "c"), geti(p, "trials"), seed);
                   json rows = json::array();
                   for (const auto& t : e.trials) rows.push_back({{"width", t.width}, {"max_layer", t.max_layer}, {"ratio", t.ratio}});
                   return json{{"mean_ratio", e.mean_ratio}, {"min_ratio", e.min_ratio}, {"max_ratio", e.max_ratio}, {"rows", rows}};
                 }});

  out.push_back({"graphs.max-independent-set", "2014-02-19", "graphs", "exact",
                 "maximum independent set of a random graph",
                 {int_param("n", 30, 1, 64, "order"), real_param("p", 0.2, 0, 1, "edge probability")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "graphs.max-independent-set");
                   Graph g = random_gnp(geti(p, "n"), getd(p, "p"), rng);
                   Mask s = max_independent_set(g);
                   return json{{"graph", graph_json(g)}, {"size", popcount(s)}, {"set", bits_of(s)}};
                 }});

  out.push_back({"cycles.smith-parity", "2014-02-19", "cycles", "exact",
                 "Hamilton cycles through each edge of every cubic graph on n vertices are even in number",
                 {int_param("n", 10, 4, 14, "even order")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n");
                   if (n % 2) fail(ErrorCode::kBadParams, "cubic graphs have even order");
                   long long graphs = 0, edges = 0, odd = 0;
                   for (const auto& g : gen::cubic_graphs(n)) {
                     auto r = cycles::smith_parity_check(g);
                     ++graphs;
                     edges += static_cast<long long>(r.edges.size());
                     odd += static_cast<long long>(r.odd_edges.size());
                   }
                   return json{{"cubic_graphs", graphs}, {"edges_checked", edges}, {"odd_edges", odd}};
                 }});

  out.push_back({"cycles.lollipop", "2014-02-19", "cycles", "exact",
                 "length of the rotation walk from a Hamilton cycle to the second cycle through an edge",
                 {int_param("n", 10, 4, 16, "even order"), int_param("index", 0, 0, 1000000, "which connected cubic graph")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n");
                   if (n % 2) fail(ErrorCode::kBadParams, "cubic graphs have even order");
                   auto all = gen::connected_cubic_graphs(n);
                   if (geti(p, "index") >= static_cast<int>(all.size())) fail(ErrorCode::kBadParams, "index out of range");
                   const Graph& g = all[geti(p, "index")];
                   std::vector<int> ham;
                   cycles::for_each_cycle(
                       g,
                       [&](const std::vector<int>& c) {
                         if (static_cast<int>(c.size()) != n) return true;
                         ham = c;
                         return false;
                       },
                       n);
                   if (ham.empty()) return json{{"graph", graph_json(g)}, {"hamiltonian", false}};
                   auto t = cycles::lollipop_walk(g, ham, {ham[0], ham[1]});
                   return json{{"graph", graph_json(g)}, {"hamiltonian", true}, {"start_cycle", t.start_cycle},
                               {"end_cycle", t.end_cycle}, {"steps", t.steps}};
                 }});

  out.push_back({"percolation.estimate", "2014-03-05", "percolation", "monte-carlo",
                 "probability that a random initial set percolates under the majority or threshold rule",
                 {string_param("family", "random-regular-4", "grid | torus | complete | random-regular-<d>"),
                  int_param("n", 200, 1, 1000000, "order (side for grid and torus)"), real_param("p", 0.3, 0, 1, "initial density"),
                  int_param("trials", 200, 1, 10000000, "trials"), string_param("rule", "majority", "majority | threshold"),
                  int_param("r", 2, 1, 100, "threshold")},
                 [](const json& p, std::uint64_t seed) {
                   auto g = perc::family(gets(p, "family"), geti(p, "n"), seed);
                   auto rule_name = gets(p, "rule");
                   if (rule_name != "majority" && rule_name != "threshold") fail(ErrorCode::kBadParams, "rule must be majority or threshold");
                   auto rule = rule_name == "majority" ? perc::Rule::strict_majority() : perc::Rule::threshold(geti(p, "r"));
                   auto e = perc::estimate_full_infection(g, getd(p, "p"), rule, geti(p, "trials"), seed);
                   return json{{"successes", e.successes}, {"trials", e.trials}, {"estimate", e.estimate},
                               {"ci_lo", e.ci_lo}, {"ci_hi", e.ci_hi}};
                 }});

  out.push_back({"percolation.threshold-sweep", "2014-03-05", "percolation", "monte-carlo",
                 "coupled sweep of the full-infection probability on the square grid",
                 {int_param("side", 32, 2, 512, "grid side"), real_param("lo", 0.01, 0, 1, "first p"),
                  real_param("hi", 0.15, 0, 1, "last p"), int_param("points", 15, 1, 1000, "grid points"),
                  int_param("trials", 200, 1, 1000000, "trials"), int_param("r", 2, 1, 4, "threshold")},
                 [](const json& p, std::uint64_t seed) {
                   auto s = perc::threshold_sweep(perc::grid(geti(p, "side")),
                                                  perc::linear_grid(getd(p, "lo"), getd(p, "hi"), geti(p, "points")),
                                                  perc::Rule::threshold(geti(p, "r")), geti(p, "trials"), seed);
                   json rows = json::array();
                   for (const auto& e : s.points)
                     rows.push_back({{"p", e.p}, {"successes", e.successes}, {"estimate", e.estimate}, {"ci_lo", e.ci_lo}, {"ci_hi", e.ci_hi}});
                   return json{{"p_half", s.p_half ? json(*s.p_half) : json()},
                               {"reference", perc::holroyd_reference(geti(p, "side"))}, {"rows", rows}};
                 }});

  out.push_back({"gl2.distance", "2014-03-05", "matrix groups", "exact",
                 "exact number of row operations reducing a matrix in GL(n,2) to the identity, n <= 5",
                 {string_param("matrix", "2,1", "rows as hex, bit j = column j")},
                 [](const json& p, std::uint64_t) {
                   auto d = gl2::distance(gl2::from_hex(gets(p, "matrix")));
                   return json{{"distance", d.distance}, {"word", d.word}};
                 }});

  out.push_back({"gl2.greedy", "2014-03-05", "matrix groups", "checker",
                 "block-column greedy reduction of a matrix in GL(n,2)",
                 {int_param("n", 16, 1, 512, "order, for a random matrix"),
                  string_param("matrix", "", "rows as hex; empty draws a random invertible matrix")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "gl2.greedy");
                   auto m = gets(p, "matrix").empty() ? gl2::random_invertible(geti(p, "n"), rng) : gl2::from_hex(gets(p, "matrix"));
                   auto r = gl2::greedy_reduce(m);
                   return json{{"matrix", gl2::to_hex(m)}, {"count", r.count}, {"block", r.block},
                               {"replayed", gl2::replay_reduces(m, r.ops)}, {"rank_lower_bound", gl2::rank_lower_bound(m)}};
                 }});

  out.push_back({"gl2.diameter", "2014-03-05", "matrix groups", "exact",
                 "diameter of GL(n,2) under row operations with its extremal matrices",
                 {int_param("n", 3, 1, 5, "order")},
                 [](const json& p, std::uint64_t) {
                   auto d = gl2::diameter(geti(p, "n"));
                   json extremal = json::array();
                   for (std::size_t i = 0; i < d.extremal.size() && i < 100; ++i) extremal.push_back(gl2::to_hex(d.extremal[i]));
                   return json{{"diameter", d.diameter}, {"extremal_count", d.extremal_count}, {"layers", d.layers},
                               {"extremal", extremal}};
                 }});

  out.push_back({"gl2.hard-instances", "2014-03-05", "matrix groups", "scan",
                 "matrices with the largest certified lower bound on their distance",
                 {int_param("n", 6, 1, 256, "order"), int_param("budget", 100, 0, 100000, "random candidates"),
                  int_param("ball_limit", 2000000, 1, 50000000, "elements in the exhausted ball")},
                 [](const json& p, std::uint64_t seed) {
                   auto h = gl2::hard_instance_search(geti(p, "n"), geti(p, "budget"), seed, geti(p, "ball_limit"));
                   return json{{"matrix", gl2::to_hex(h.matrix)}, {"family", h.family}, {"lower", h.lower},
                               {"certificate", h.certificate}, {"upper", h.upper}};
                 }});

  out.push_back({"hypergraphs.l-ham-saturation", "2014-03-05", "hypergraphs", "exact",
                 "fewest edges of an l-Hamiltonian-saturated k-graph on n vertices",
                 {int_param("n", 5, 2, 9, "order"), int_param("k", 3, 2, 5, "uniformity"), int_param("l", 2, 1, 4, "overlap")},
                 [](const json& p, std::uint64_t) {
                   auto s = ext::sat_search(geti(p, "n"), geti(p, "k"), geti(p, "l"));
                   return json{{"edges", s.edges}, {"witness", s.edges >= 0 ? hyperedges_json(s.witness) : json()},
                               {"classes_checked", s.classes_checked}};
                 }});

  out.push_back({"mckay.half-cycles", "2014-03-19", "cycles", "exact",
                 "largest number of n/2-cycles in a connected cubic graph on n vertices",
                 {int_param("n", 12, 4, 20, "even order")},
                 [](const json& p, std::uint64_t) {
                   auto m = cycles::max_half_cycles(geti(p, "n"));
                   json w = json::array();
                   for (const auto& g : m.witnesses) w.push_back(io::to_graph6(g));
                   return json{{"max", m.max_count.str()}, {"witnesses", w}};
                 }});

  out.push_back({"mckay.automorphisms", "2014-03-19", "graphs", "exact",
                 "largest automorphism group of a 3-connected cubic graph on n vertices",
                 {int_param("n", 10, 4, 14, "even order")},
                 [](const json& p, std::uint64_t) {
                   auto m = gen::max_aut_3connected_cubic(geti(p, "n"));
                   json w = json::array();
                   for (const auto& g : m.witnesses) w.push_back(io::to_graph6(g));
                   return json{{"max_order", m.max_order.str()}, {"witnesses", w}, {"reference_bound", m.reference_bound}};
                 }});

  out.push_back({"mckay.magic-positivity", "2014-03-19", "designs", "exact",
                 "magic matrices with line sum k, the positive fraction and the Ehrhart reciprocity check",
                 {int_param("n", 3, 1, 4, "order"), int_param("k", 10, 0, 40, "line sum")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n"), k = geti(p, "k");
                   auto e = des::ehrhart_check(n, k);
                   return json{{"magic", des::count_magic(n, k).str()}, {"positive", des::count_positive_magic(n, k).str()},
                               {"positive_fraction", des::positive_fraction(n, k).str()},
                               {"polynomial_matches", e.polynomial_matches}, {"reciprocity", e.reciprocity}};
                 }});

  out.push_back({"paths.realizability", "2014-03-19", "graphs", "exact",
                 "a simple graph on labelled edges in which given sequences are simple paths",
                 {int_param("labels", 4, 1, 12, "edge labels"), json_param("paths", json::array({{0, 1, 2}, {2, 3}}), "label sequences")},
                 [](const json& p, std::uint64_t) {
                   std::vector<std::vector<int>> seqs;
                   const auto& raw = p.at("paths");
                   if (!raw.is_array()) fail(ErrorCode::kBadParams, "paths must be an array of label arrays");
                   for (const auto& s : raw) {
                     if (!s.is_array()) fail(ErrorCode::kBadParams, "paths must be an array of label arrays");
                     std::vector<int> seq;
                     for (const auto& x : s) {
                       if (!x.is_number_integer()) fail(ErrorCode::kBadParams, "labels are integers");
                       seq.push_back(x.get<int>());
                     }
                     seqs.push_back(seq);
                   }
                   auto r = des::realize_path_system(geti(p, "labels"), seqs);
                   if (!r) return json{{"realizable", false}};
                   return json{{"realizable", true}, {"graph", graph_json(r->graph)}, {"edge_of", r->edge_of}};
                 }});

  out.push_back({"extremal.turan", "2014-04-02", "extremal", "exact",
                 "most edges of an n-vertex graph with no forbidden subgraph",
                 {int_param("n", 6, 1, 10, "order"), string_param("forbidden", "C3", "comma list of Ck, Kk, Pk")},
                 [](const json& p, std::uint64_t) {
                   auto t = ext::turan_number(geti(p, "n"), parse_forbidden(gets(p, "forbidden")));
                   return json{{"edges", t.edges}, {"witness", graph_json(t.witness)}};
                 }});

  out.push_back({"cycles.cycle-space", "2014-04-02", "cycles", "exact",
                 "dimension of the cycle space over GF(p), and a basis of shortest cycles when 3-edge-connected",
                 {string_param("graph", "petersen", "path | cycle | complete | star | petersen | prism | random | graph6:<code>"),
                  int_param("n", 8, 1, 16, "order"), real_param("density", 0.5, 0, 1, "edge probability for random"),
                  int_param("p", 3, 0, 97, "prime, or 0 for the rationals")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "cycles.cycle-space");
                   const int prime = geti(p, "p");
                   for (int d = 2; d * d <= prime; ++d)
                     if (prime % d == 0) fail(ErrorCode::kBadParams, "p must be prime or 0");
                   if (prime == 1) fail(ErrorCode::kBadParams, "p must be prime or 0");
                   Graph g = named_graph(gets(p, "graph"), geti(p, "n"), getd(p, "density"), rng);
                   json out{{"graph", graph_json(g)}, {"dimension", cycles::cycle_space_dimension(g, prime)},
                            {"edges", g.size()}, {"cyclomatic", g.size() - g.order() + 1}};
                   if (prime != 2 && g.order() >= 2 && edge_connectivity(g) >= 3) {
                     auto b = cycles::explicit_cycle_basis(g, prime);
                     out["shortest_cycle_basis_rank"] = b.rank;
                     out["shortest_cycles_independent"] = b.independent;
                   }
                   return out;
                 }});

  out.push_back({"designs.three-tournament-domination", "2014-04-02", "designs", "scan",
                 "domination numbers of random 3-tournaments meeting the pair condition",
                 {int_param("n", 6, 3, 12, "vertices"), int_param("budget", 200, 1, 1000000, "samples")},
                 [](const json& p, std::uint64_t seed) {
                   auto s = des::dom_scan(geti(p, "n"), geti(p, "budget"), seed);
                   return json{{"max_dom", s.max_dom}, {"histogram", s.histogram}, {"samples", s.samples}};
                 }});

  out.push_back({"extremal.bipartization", "2014-04-02", "extremal", "exact",
                 "fewest edge deletions making a random (optionally triangle-free) graph bipartite",
                 {int_param("n", 10, 1, 24, "order"), real_param("p", 0.5, 0, 1, "edge probability"),
                  bool_param("triangle_free", true, "insert edges in random order, skipping those closing a triangle")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "extremal.bipartization");
                   const int n = geti(p, "n");
                   Graph g(n);
                   std::vector<std::pair<int, int>> pairs;
                   for (int u = 0; u < n; ++u)
                     for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
                   std::shuffle(pairs.begin(), pairs.end(), rng);
                   std::bernoulli_distribution coin(getd(p, "p"));
                   for (auto [u, v] : pairs) {
                     if (!coin(rng)) continue;
                     bool closes = false;
                     if (p.at("triangle_free").get<bool>())
                       for (int w = 0; w < n && !closes; ++w) closes = g.has_edge(u, w) && g.has_edge(v, w);
                     if (!closes) g.add_edge(u, v);
                   }
                   auto b = ext::bipartization_cost(g);
                   return json{{"graph", graph_json(g)}, {"deletions", b.deletions}, {"clique_number", b.clique_number},
                               {"triangle_free_bound", b.triangle_free_bound.str()}, {"kr_free_bound", b.kr_free_bound.str()}};
                 }});

  out.push_back({"extremal.hyper-ramsey", "2014-04-16", "extremal", "checker",
                 "red loose triangle or blue K_t in a random red/blue colouring of the triples of [n]",
                 {int_param("n", 7, 3, 13, "vertices"), int_param("t", 4, 3, 13, "blue clique order"),
                  real_param("red", 0.5, 0, 1, "probability a triple is red")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "extremal.hyper-ramsey");
                   const int n = geti(p, "n");
                   std::bernoulli_distribution red(getd(p, "red"));
                   std::vector<int> colour(ext::triple_count(n));
                   for (auto& c : colour) c = red(rng) ? 0 : 1;
                   auto v = ext::hyper_ramsey_witness(n, colour, geti(p, "t"));
                   const char* kind = v.kind == ext::RamseyVerdict::Kind::kRedTriangle ? "red-triangle"
                                      : v.kind == ext::RamseyVerdict::Kind::kBlueClique ? "blue-clique"
                                                                                        : "none";
                   json reds = json::array();
                   for (Mask e : v.red_edges) reds.push_back(bits_of(e));
                   return json{{"verdict", kind}, {"red_edges", reds}, {"blue_clique", bits_of(v.blue_clique)}};
                 }});

  out.push_back({"designs.latin-avoidance", "2014-04-16", "designs", "scan",
                 "Latin squares avoiding arrays whose symbols each fill n - 2 cells",
                 {int_param("n", 4, 2, 8, "order"), string_param("mode", "random", "random | exhaustive (n <= 4)"),
                  int_param("budget", 1000, 1, 100000000, "arrays in random mode")},
                 [](const json& p, std::uint64_t seed) {
                   const int n = geti(p, "n");
                   des::AvoidScan s;
                   if (gets(p, "mode") == "exhaustive") s = des::avoidance_scan_exhaustive(n);
                   else if (gets(p, "mode") == "random") s = des::avoidance_scan_random(n, geti(p, "budget"), seed);
                   else fail(ErrorCode::kBadParams, "mode must be random or exhaustive");
                   return json{{"arrays", s.arrays}, {"classes", s.classes},
                               {"counterexample", s.counterexample ? json(*s.counterexample) : json()}};
                 }});

  out.push_back({"families.katona", "2014-04-29", "set families", "exact",
                 "largest k-intersecting family of subsets of [n]",
                 {int_param("n", 4, 1, 8, "ground set"), int_param("k", 2, 1, 8, "intersection size")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n"), k = geti(p, "k");
                   auto f = fam::max_family(n, {k, false, -1});
                   return json{{"max", f.size}, {"bound", katona_bound(n, k)}, {"family", family_json(f.family, n)}};
                 }});

  out.push_back({"families.antichain-diameter", "2014-04-29", "set families", "exact",
                 "largest k-intersecting antichain against the largest antichain of diameter at most n - k",
                 {int_param("n", 5, 1, 7, "ground set"), int_param("k", 1, 0, 7, "intersection size")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n"), k = geti(p, "k");
                   if (k > n) fail(ErrorCode::kBadParams, "need k <= n");
                   auto anti = fam::max_family(n, {k, true, -1});
                   auto diam = fam::max_family(n, {0, true, n - k});
                   return json{{"intersecting_antichain", anti.size}, {"diameter_antichain", diam.size},
                               {"bound", milner_bound(n, k)}, {"bound_holds", diam.size <= milner_bound(n, k)},
                               {"diameter_family", family_json(diam.family, n)}};
                 }});

  out.push_back({"designs.symmetric-ramsey", "2014-05-07", "designs", "exact",
                 "whether every k-colouring of S_n contains a monochromatic copy of S_r",
                 {int_param("n", 3, 1, 4, "degree"), int_param("k", 2, 1, 4, "colours"), int_param("r", 2, 1, 4, "copy degree")},
                 [](const json& p, std::uint64_t) {
                   const int n = geti(p, "n"), k = geti(p, "k"), r = geti(p, "r");
                   return json{{"copies", des::symmetric_copies(n, r).size()}, {"arrows", des::sym_ramsey_check(n, k, r)}};
                 }});
}

}  // namespace iml::cli::detail
