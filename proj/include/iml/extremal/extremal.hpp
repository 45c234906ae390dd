#pragma once

#include <optional>
#include <vector>

#include "iml/core/graph.hpp"
#include "iml/core/hypergraph.hpp"
#include "iml/core/rational.hpp"

namespace iml::ext {

struct TuranResult {
  int edges = 0;
  Graph witness;
};
// Largest number of edges of an n-vertex graph containing no member of the
// family as a (not necessarily induced) subgraph. n <= 10, else TooLarge.
TuranResult turan_number(int n, const std::vector<Graph>& forbidden);
bool is_free_of(const Graph& g, const std::vector<Graph>& forbidden);
std::vector<Graph> all_cycles(int max_length);  // C_3 .. C_max_length

// A cyclic vertex order whose edges are the k consecutive vertices starting at
// every multiple of k - l. Throws BadDivisibility unless (k - l) | n, and
// InvalidArgument unless H is k-uniform with 1 <= l < k.
std::optional<std::vector<int>> l_hamiltonian_cycle(const Hypergraph& h, int l);
bool is_l_hamiltonian(const Hypergraph& h, int l);
// Not l-Hamiltonian, and adding any missing k-set makes it so.
bool is_l_ham_saturated(const Hypergraph& h, int l);
std::vector<Mask> overlap_cycle_edges(const std::vector<int>& order, int k, int l);

struct SatResult {
  int edges = -1;  // -1 when no saturated k-graph exists on n vertices
  Hypergraph witness;
  long long classes_checked = 0;
};
// Exact minimum by exhausting isomorphism classes level by level in the
// number of edges. n <= 9 for k = 2, n <= 6 otherwise.
SatResult sat_search(int n, int k, int l);

struct Bipartization {
  int deletions = 0;
  Mask side = 0;       // one side of a maximum cut
  int clique_number = 0;
  Rational triangle_free_bound = 0;  // n^2 / 25
  Rational kr_free_bound = 0;        // (r-2)^2 n^2 / (4 (r-1)^2), r = clique_number + 1
};
// |E| minus the maximum cut, by Gray-code enumeration of cuts. n <= 24.
Bipartization bipartization_cost(const Graph& g);

// Colouring of the triples of [n]: colour[triple_index(n, a, b, c)], 0 red, 1 blue.
int triple_index(int n, int a, int b, int c);
int triple_count(int n);
struct RamseyVerdict {
  enum class Kind { kNone, kRedTriangle, kBlueClique } kind = Kind::kNone;
  std::vector<Mask> red_edges;  // three red triples, pairwise meeting in one point, no common point
  Mask blue_clique = 0;         // t vertices all of whose triples are blue
};
RamseyVerdict hyper_ramsey_witness(int n, const std::vector<int>& colour, int t);

}  // namespace iml::ext
