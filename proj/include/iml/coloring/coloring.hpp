#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iml/core/graph.hpp"
#include "iml/core/hypergraph.hpp"
#include "iml/core/rational.hpp"

namespace iml::color {

struct Coloring {
  std::vector<int> colour;  // per vertex, in [0, k)
  int k = 0;

  std::vector<int> class_sizes() const;
};

// Independent checkers; every colouring the module returns has passed them.
bool is_proper(const Graph& g, const Coloring& c);
bool is_equitable(const Graph& g, const Coloring& c);
bool is_proper_edge_colouring(const Graph& g, const std::vector<int>& edge_colour);

// Exact vertex colouring by DSATUR backtracking; n <= 64, else TooLarge.
std::optional<Coloring> k_colouring(const Graph& g, int k);
int chromatic_number(const Graph& g);
Coloring optimal_colouring(const Graph& g);

struct EdgeClass {
  int max_degree = 0;
  int chromatic_index = 0;
  int edge_class = 1;           // 1 when chromatic_index == max_degree
  std::vector<int> colouring;   // per edge, g.edges() order
};
EdgeClass edge_chromatic_class(const Graph& g);
// Exact edge-colouring search; `fixed` holds -1 or a forced colour per edge.
std::optional<std::vector<int>> edge_colouring(const Graph& g, int colours, const std::vector<int>& fixed = {});

// Odd vertex set S, |S| >= 3, with e(G[S]) > max_degree(G) * (|S|-1)/2; least
// such mask. n <= 24, else TooLarge.
std::optional<Mask> has_overfull_subgraph(const Graph& g);

enum class EquitableMethod { kRecolouring, kExactSearch };
struct EquitableResult {
  Coloring colouring;
  EquitableMethod method = EquitableMethod::kRecolouring;
};
// Max of d(x)+d(y) over edges xy; 0 for edgeless graphs.
int ore_degree(const Graph& g);
// Delta < k: edges are inserted one at a time and each conflict is repaired by
// shifting vertices along an accessibility path from the oversized class to
// the undersized one (least index throughout). When no such path exists the
// routine falls back to exact search and reports it. theta < 2k: exact search,
// permitted only with allow_exact. Otherwise PreconditionUnmet.
EquitableResult equitable_coloring(const Graph& g, int k, bool allow_exact = true);
std::optional<Coloring> exact_equitable_colouring(const Graph& g, int k);

// (J, K) with max degree of G[J] <= j and of G[K] <= k.
std::optional<std::pair<Mask, Mask>> improper_partition(const Graph& g, int j, int k);

// Least k such that G, padded with isolated vertices to a multiple of k, plus
// any partition of the vertices into k-cliques is k-colourable. n <= 8.
int strong_chromatic_number(const Graph& g);
// Whether the padded union with every partition into k-cliques is k-colourable.
bool is_strongly_colourable(const Graph& g, int k);

// True when every r-colouring of V(F) has a colour class containing a copy of G
// (not necessarily induced). |V(F)| <= 20 and r^(|V(F)|-1) <= 2^26.
bool arrows_vertex(const Graph& f, const Graph& g, int r);
// A colouring with no monochromatic copy of G, if one exists.
std::optional<std::vector<int>> avoiding_colouring(const Graph& f, const Graph& g, int r);
bool contains_subgraph(const Graph& host, const Graph& pattern);

struct McrScan {
  bool found = false;
  Rational best_mad = 0;
  Graph witness;
  long long graphs_checked = 0;
  long long arrowing = 0;
};
// Minimum mad(F) over generated connected F with F -> (G)^v_r, |V(F)| <= n_max.
McrScan mcr_scan(const Graph& g, int r, int n_max);

struct PendantColour {
  int u = 0, v = 0;  // one endpoint has degree 1
  int colour = 0;
};
// Proper (d+f)-edge-colouring extending the precolouring, per edge in
// g.edges() order. Throws BadPrecolouring, InvalidArgument if Delta > d.
std::optional<std::vector<int>> extend_pendant_precoloring(const Graph& g, const std::vector<PendantColour>& pre,
                                                           int d, int f);
struct PendantScan {
  int max_forced_f = 0;
  Graph witness;
  std::vector<PendantColour> witness_precolouring;
  long long instances = 0;
};
// Over connected graphs with Delta <= d on at most n_max vertices, every set of
// at most d pendant edges and every admissible colour pattern on them.
PendantScan pendant_f_scan(int d, int n_max);

struct ChordDiagram {
  std::vector<int> endpoints;  // 2c labels in cyclic order, each chord label twice
};
// Chords cross when their endpoints interleave. Throws InvalidArgument.
Graph circle_graph(const ChordDiagram& diagram);

// Disjoint r-subsets of the cyclically ordered 0..n-1 are adjacent when the
// X/O word read around the circle matches the pattern up to rotation and
// exchanging X with O. r in {2, 3}; throws BadPattern.
Graph shift_graph_cyclic(int n, int r, const std::string& pattern);
std::vector<Mask> shift_graph_vertices(int n, int r);

struct HyperStrong {
  int chi_s = 0;
  int chi_d = 0;
  int rank = 0;
  bool chi_d_exact = true;  // false: chi_d is a sampled lower bound
  long long derived_graphs = 0;
};
inline constexpr long long kMaxDerivedGraphs = 1000000;
// chi_s colours the clique expansion; chi_d maximises over derived graphs,
// which keep one vertex pair from every edge of size >= 2.
HyperStrong hyper_strong_chromatic(const Hypergraph& h, bool allow_sampling = true, std::uint64_t seed = 1);

bool is_k_critical(const Graph& g, int k);
struct CriticalScan {
  int max_min_degree = -1;  // -1 when no k-critical graph was found
  Graph witness;
  long long critical = 0;
};
// Connected graphs on at most n_max vertices with minimum degree >= k-1.
CriticalScan critical_min_degree_scan(int k, int n_max);

struct MonoCyclePartition {
  int count = 0;
  std::vector<std::vector<int>> cycles;  // vertex sequences
  std::vector<int> colours;              // -1 for a single vertex
};
// colour[u][v] for u != v, symmetric. n <= 12, else TooLarge.
MonoCyclePartition min_mono_cycle_partition(const std::vector<std::vector<int>>& colour);

}  // namespace iml::color
