#pragma once

#include <optional>
#include <vector>

#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml {

struct StructureReport {
  int max_degree = 0;
  int min_degree = 0;
  bool bipartite = true;
  int components = 0;
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
};

StructureReport structure_report(const Graph& g);

std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// Two-colouring (side per vertex) if bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Menger values via unit-capacity max-flow.
int local_edge_connectivity(const Graph& g, int s, int t);
int local_vertex_connectivity(const Graph& g, int s, int t);  // s, t non-adjacent
int edge_connectivity(const Graph& g);
int vertex_connectivity(const Graph& g);  // n-1 for complete graphs

// Maximum average degree, exact.
Rational mad(const Graph& g);
// Densest-subgraph witness (a vertex set attaining mad); small graphs only.
Mask densest_subgraph(const Graph& g);

// Maximum clique by bitset branch-and-bound with greedy colouring bounds.
std::vector<int> max_clique(const Graph& g);
// Maximum independent set as a vertex mask; n <= 64.
Mask max_independent_set(const Graph& g);
// Largest a+b over complete bipartite subgraphs K_{a,b}, a, b >= 1.
int biclique_number(const Graph& g);

}  // namespace iml
