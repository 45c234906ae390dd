#include <algorithm>
#include <numeric>

#include "iml/coloring/coloring.hpp"
#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/core/random.hpp"
#include "iml/core/structure.hpp"
#include "problems.hpp"

namespace iml::cli::detail {

namespace {

Graph pattern_graph(const std::string& name) {
  if (name == "path3") return graphs::path(3);
  if (name == "triangle") return graphs::complete(3);
  if (name == "path4") return graphs::path(4);
  if (name == "star3") return graphs::star(3);
  if (name == "cycle4") return graphs::cycle(4);
  fail(ErrorCode::kBadParams, "pattern must be path3, path4, star3, triangle or cycle4");
}

json colouring_json(const color::Coloring& c) { return json{{"k", c.k}, {"colour", c.colour}, {"sizes", c.class_sizes()}}; }

}  // namespace

void add_colouring_problems(std::vector<ProblemEntry>& out) {
  out.push_back({"colouring.pendant-precolouring", "2014-01-16", "edge colouring", "scan",
                 "extra colours needed to extend precoloured pendant edges to a proper edge colouring",
                 {int_param("d", 2, 1, 3, "maximum degree"), int_param("n_max", 5, 2, 6, "largest order scanned")},
                 [](const json& p, std::uint64_t) {
                   auto s = color::pendant_f_scan(geti(p, "d"), geti(p, "n_max"));
                   json pre = json::array();
                   for (const auto& c : s.witness_precolouring) pre.push_back({c.u, c.v, c.colour});
                   return json{{"max_forced_f", s.max_forced_f}, {"instances", s.instances},
                               {"witness", graph_json(s.witness)}, {"witness_precolouring", pre}};
                 }});

  out.push_back({"colouring.equitable", "2014-02-06", "vertex colouring", "checker",
                 "equitable k-colouring of a random graph by recolouring along accessibility paths",
                 {int_param("n", 12, 1, 40, "order"), real_param("p", 0.3, 0, 1, "edge probability"),
                  int_param("k", 0, 0, 40, "colours; 0 means max degree + 1")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.equitable");
                   Graph g = random_gnp(geti(p, "n"), getd(p, "p"), rng);
                   int k = geti(p, "k") ? geti(p, "k") : g.max_degree() + 1;
                   auto r = color::equitable_coloring(g, k);
                   return json{{"graph", graph_json(g)}, {"k", k},
                               {"method", r.method == color::EquitableMethod::kRecolouring ? "recolouring" : "exact"},
                               {"equitable", color::is_equitable(g, r.colouring) && color::is_proper(g, r.colouring)},
                               {"colouring", colouring_json(r.colouring)}};
                 }});

  out.push_back({"colouring.hypergraph-strong", "2014-02-06", "hypergraph colouring", "exact",
                 "strong chromatic number of a random hypergraph against the derived-graph bound",
                 {int_param("n", 7, 1, 12, "vertices"), int_param("edges", 6, 0, 30, "edges"),
                  int_param("max_size", 3, 1, 6, "largest edge size")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.hypergraph-strong");
                   const int n = geti(p, "n"), top = std::min(geti(p, "max_size"), n);
                   std::vector<Mask> edges;
                   std::vector<int> perm(n);
                   for (int i = 0; i < geti(p, "edges") && n > 0; ++i) {
                     std::iota(perm.begin(), perm.end(), 0);
                     std::shuffle(perm.begin(), perm.end(), rng);
                     int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(top));
                     Mask e = 0;
                     for (int j = 0; j < size; ++j) e |= bit(perm[j]);
                     edges.push_back(e);
                   }
                   Hypergraph h(n, edges);
                   auto r = color::hyper_strong_chromatic(h, true, seed);
                   return json{{"hypergraph", io::to_json(h)}, {"chi_s", r.chi_s}, {"chi_d", r.chi_d}, {"rank", r.rank},
                               {"chi_d_exact", r.chi_d_exact}, {"derived_graphs", r.derived_graphs}};
                 }});

  out.push_back({"colouring.critical-min-degree", "2014-02-19", "vertex colouring", "scan",
                 "largest minimum degree of a k-critical graph on few vertices",
                 {int_param("k", 4, 2, 6, "chromatic number"), int_param("n_max", 7, 1, 8, "largest order")},
                 [](const json& p, std::uint64_t) {
                   auto s = color::critical_min_degree_scan(geti(p, "k"), geti(p, "n_max"));
                   return json{{"max_min_degree", s.max_min_degree}, {"critical_graphs", s.critical},
                               {"witness", s.max_min_degree >= 0 ? graph_json(s.witness) : json()}};
                 }});

  out.push_back({"colouring.shift-graphs", "2014-02-19", "vertex colouring", "exact",
                 "chromatic number of a cyclic shift graph given by an X/O pattern",
                 {int_param("n", 7, 2, 12, "points on the circle"), int_param("r", 2, 2, 3, "subset size"),
                  string_param("pattern", "XXOO", "word of r X's and r O's")},
                 [](const json& p, std::uint64_t) {
                   Graph g = color::shift_graph_cyclic(geti(p, "n"), geti(p, "r"), gets(p, "pattern"));
                   return json{{"vertices", g.order()}, {"edges", g.size()}, {"chromatic_number", color::chromatic_number(g)}};
                 }});

  out.push_back({"colouring.arrowing-density", "2014-02-19", "vertex colouring", "scan",
                 "least maximum average degree of a graph arrowing a pattern in r colours",
                 {string_param("pattern", "path3", "path3 | path4 | star3 | triangle | cycle4"),
                  int_param("r", 2, 2, 3, "colours"), int_param("n_max", 6, 2, 7, "largest order")},
                 [](const json& p, std::uint64_t) {
                   auto s = color::mcr_scan(pattern_graph(gets(p, "pattern")), geti(p, "r"), geti(p, "n_max"));
                   return json{{"found", s.found}, {"best_mad", s.found ? s.best_mad.str() : ""},
                               {"witness", s.found ? graph_json(s.witness) : json()}, {"graphs_checked", s.graphs_checked},
                               {"arrowing", s.arrowing}};
                 }});

  out.push_back({"colouring.overfull", "2014-02-20", "edge colouring", "exact",
                 "overfull subgraphs and the edge-chromatic class of a graph",
                 {string_param("graph", "random", "path | cycle | complete | star | petersen | prism | random | graph6:<code>"),
                  int_param("n", 9, 1, 16, "order"), real_param("p", 0.5, 0, 1, "edge probability for random")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.overfull");
                   Graph g = named_graph(gets(p, "graph"), geti(p, "n"), getd(p, "p"), rng);
                   auto of = color::has_overfull_subgraph(g);
                   auto cls = color::edge_chromatic_class(g);
                   return json{{"graph", graph_json(g)}, {"overfull_set", of ? json(bits_of(*of)) : json()},
                               {"max_degree", cls.max_degree}, {"chromatic_index", cls.chromatic_index},
                               {"class", cls.edge_class}};
                 }});

  out.push_back({"colouring.improper-partition", "2014-03-19", "vertex colouring", "exact",
                 "(j, k)-colouring: parts whose induced maximum degrees are at most j and k",
                 {int_param("n", 10, 1, 20, "order"), real_param("p", 0.4, 0, 1, "edge probability"),
                  int_param("j", 1, 0, 10, "degree bound of the first part"),
                  int_param("k", 1, 0, 10, "degree bound of the second part")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.improper-partition");
                   Graph g = random_gnp(geti(p, "n"), getd(p, "p"), rng);
                   auto part = color::improper_partition(g, geti(p, "j"), geti(p, "k"));
                   return json{{"graph", graph_json(g)}, {"exists", part.has_value()},
                               {"first", part ? json(bits_of(part->first)) : json()},
                               {"second", part ? json(bits_of(part->second)) : json()}};
                 }});

  out.push_back({"colouring.circle-graphs", "2014-03-19", "vertex colouring", "exact",
                 "clique, independence and chromatic numbers of a random circle graph",
                 {int_param("chords", 8, 1, 20, "number of chords")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.circle-graphs");
                   color::ChordDiagram d;
                   for (int c = 0; c < geti(p, "chords"); ++c) d.endpoints.insert(d.endpoints.end(), {c, c});
                   std::shuffle(d.endpoints.begin(), d.endpoints.end(), rng);
                   Graph g = color::circle_graph(d);
                   return json{{"endpoints", d.endpoints}, {"graph", graph_json(g)},
                               {"clique_number", max_clique(g).size()},
                               {"independence_number", popcount(max_independent_set(g))},
                               {"chromatic_number", color::chromatic_number(g)}};
                 }});

  out.push_back({"colouring.mono-cycle-partition", "2014-03-19", "edge colouring", "exact",
                 "fewest monochromatic cycles partitioning the vertices of a randomly edge-coloured complete graph",
                 {int_param("n", 8, 1, 12, "order"), int_param("colours", 2, 1, 6, "palette size")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.mono-cycle-partition");
                   const int n = geti(p, "n");
                   std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
                   for (int u = 0; u < n; ++u)
                     for (int v = u + 1; v < n; ++v)
                       c[u][v] = c[v][u] = static_cast<int>(rng() % static_cast<unsigned>(geti(p, "colours")));
                   auto r = color::min_mono_cycle_partition(c);
                   return json{{"colouring", c}, {"count", r.count}, {"cycles", r.cycles}, {"colours", r.colours}};
                 }});

  out.push_back({"colouring.strong-chromatic", "2014-04-02", "vertex colouring", "exact",
                 "strong chromatic number against biclique number and 3 max degree - 1",
                 {string_param("graph", "random", "path | cycle | complete | star | petersen | prism | random | graph6:<code>"),
                  int_param("n", 6, 1, 8, "order"), real_param("p", 0.5, 0, 1, "edge probability for random")},
                 [](const json& p, std::uint64_t seed) {
                   auto rng = master_rng(seed, "colouring.strong-chromatic");
                   Graph g = named_graph(gets(p, "graph"), geti(p, "n"), getd(p, "p"), rng);
                   int s = color::strong_chromatic_number(g), b = biclique_number(g);
                   return json{{"graph", graph_json(g)}, {"strong_chromatic", s}, {"biclique", b},
                               {"upper", 3 * g.max_degree() - 1}, {"above_biclique_plus_one", s > b + 1}};
                 }});
}

}  // namespace iml::cli::detail
