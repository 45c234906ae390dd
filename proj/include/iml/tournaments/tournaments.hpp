#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"

namespace iml::tour {

using Arc = std::pair<int, int>;

// Menger values by unit-capacity max-flow between all needed ordered pairs.
int arc_strong_connectivity(const Digraph& d);  // lambda(D)
int vertex_strong_connectivity(const Digraph& d);  // n-1 for complete digraphs
inline int lambda(const Digraph& d) { return arc_strong_connectivity(d); }
bool is_k_arc_strong(const Digraph& d, int k);
// False when n < k+1.
bool is_k_strong(const Digraph& d, int k);

struct StrongDecomposition {
  int k = 0;
  std::vector<std::vector<Arc>> classes;
};
// Exact backtracking over arc classes in arc-index order.
std::optional<StrongDecomposition> decompose_arc_disjoint_strong(const Digraph& d, int k);
bool verify_decomposition(const Digraph& d, const StrongDecomposition& dec);

// Hamilton cycles as vertex sequences starting at 0. Throws NotRegular.
std::optional<std::vector<std::vector<int>>> kelly_decomposition(const Digraph& t);
bool verify_kelly(const Digraph& t, const std::vector<std::vector<int>>& cycles);

// k vertex-disjoint directed cycles (length >= 2), or none.
std::optional<std::vector<std::vector<int>>> disjoint_cycles(const Digraph& d, int k);

struct SpanningWitness {
  int arcs = 0;
  Digraph subdigraph;
};
// Minimum arcs of a spanning subdigraph with min in- and out-degree >= k, or
// nothing when some vertex of T has degree below k. Throws TooSmall if n < 2k+1.
std::optional<SpanningWitness> alpha_k(const Digraph& t, int k);
// Minimum arcs of a spanning k-arc-strong subdigraph. Throws NotKArcStrong.
SpanningWitness beta_k(const Digraph& t, int k);

struct ReversalResult {
  std::vector<Arc> reversed;  // arcs of the input that were reversed
  Digraph result;
  bool achieved = false;
};
// Minimum reversals reaching min semi-degree >= k (resp. k-arc-strong).
// Iterative deepening over reversal sets. Throws TooSmall if n < 2k+1.
ReversalResult reversal_deg(const Digraph& t, int k);
ReversalResult reversal_arc_strong(const Digraph& t, int k);

// Checks the definition over all pairs of internally disjoint (x,y)-paths; n <= 12.
bool is_path_mergeable(const Digraph& d);
bool has_cutvertex(const Digraph& d);
struct PmHamPath {
  std::optional<std::vector<int>> path;
  std::vector<std::vector<int>> strong_components;  // topological order
};
PmHamPath pm_ham_path(const Digraph& d);
std::optional<std::vector<int>> hamiltonian_path(const Digraph& d);
std::optional<std::vector<int>> hamiltonian_cycle(const Digraph& d);
// Two arc-disjoint Hamilton cycles: every Hamilton cycle through 0 is tried as
// the first, the second by subset DP on the remaining arcs. n <= 10.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_arc_disjoint_hamilton_cycles(const Digraph& d);

// Partition V into t parts inducing k-strong subdigraphs, root i in part i when given.
std::optional<std::vector<std::vector<int>>> partition_into_k_strong(const Digraph& t, int parts, int k,
                                                                     const std::vector<int>& roots = {});

// A 2-factor of the underlying graph whose first cycle is a directed cycle of D
// (length >= 3). Cycles as vertex sequences; the first follows arc directions.
std::optional<std::vector<std::vector<int>>> two_factor_one_directed(const Digraph& d);

struct ColouredBipartite {
  int left = 0, right = 0;
  struct Edge {
    int u, v, colour;  // u in [0,left), v in [0,right), colour 1 or 2
  };
  std::vector<Edge> edges;
};
// Edge-disjoint perfect matchings M1 (colour 1 only) and M2, as edge indices.
std::optional<std::pair<std::vector<int>, std::vector<int>>> colored_two_matchings(const ColouredBipartite& b);

}  // namespace iml::tour
