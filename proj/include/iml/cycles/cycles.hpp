#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml::cycles {

using Edge = std::pair<int, int>;

struct CycleCount {
  int length = 0;
  BigInt count = 0;
};

// Calls f once per simple cycle (length >= 3). The sequence starts at the
// cycle's smallest vertex and its second vertex is smaller than its last.
// Returning false from f stops the enumeration. n <= 64.
void for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& f,
                    int max_length = 64);

CycleCount count_cycles_of_length(const Graph& g, int length);

struct HalfCycleMaximum {
  int n = 0;
  BigInt max_count = 0;
  std::vector<Graph> witnesses;
};
// Maximum number of n/2-cycles over connected cubic graphs on n vertices.
HalfCycleMaximum max_half_cycles(int n);

enum class HamMethod { kAuto, kSubsetDp, kSearch };
inline constexpr int kMaxDpOrder = 18;

BigInt count_ham_cycles(const Graph& g, HamMethod method = HamMethod::kAuto);
// Throws EdgeAbsent when uv is not an edge.
BigInt count_ham_through_edge(const Graph& g, int u, int v, HamMethod method = HamMethod::kAuto);

struct HamCensus {
  BigInt total = 0;
  std::vector<Edge> edges;        // g.edges() order
  std::vector<BigInt> per_edge;   // Hamilton cycles through each edge
};
// One DFS pass over all Hamilton cycles.
HamCensus ham_census(const Graph& g);

struct SmithReport {
  std::vector<Edge> edges;
  std::vector<BigInt> counts;
  std::vector<Edge> odd_edges;  // nonempty only if something is broken
  bool all_even() const { return odd_edges.empty(); }
};
// Throws NotCubic.
SmithReport smith_parity_check(const Graph& g);

struct LollipopTrace {
  std::vector<int> start_cycle;
  Edge start_edge;
  std::vector<int> end_cycle;
  long long steps = 0;
};
// Thomason's walk on Hamilton paths that begin with the fixed edge e = (x, y):
// the path is the start cycle minus x's other cycle edge, and each step rotates
// at the free end. Stops when the free end is adjacent to x through an edge
// other than the one that closes the start cycle. Cycles are vertex sequences
// starting x, y.
LollipopTrace lollipop_walk(const Graph& g, const std::vector<int>& cycle, Edge e);

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

// Rank of the span of the cycles' characteristic vectors over GF(p), or over
// the rationals when p == 0. Throws Disconnected.
int cycle_space_dimension(const Graph& g, int p);

struct CycleBasisAttempt {
  std::vector<std::vector<int>> cycles;  // one per edge, g.edges() order
  int rank = 0;
  bool independent = false;
};
// Shortest cycle through each edge (ties: lexicographically least vertex
// sequence starting at the smaller endpoint). p odd prime or 0.
// Throws NotThreeEdgeConnected.
CycleBasisAttempt explicit_cycle_basis(const Graph& g, int p);

// Exact (x, y)-path search by subset DP, n <= 24.
std::optional<std::vector<int>> ham_path_xy(const Digraph& d, int x, int y);
struct LongestPath {
  int length = 0;  // arcs; 0 when no (x, y)-path exists
  std::vector<int> path;
};
LongestPath longest_xy_path(const Digraph& d, int x, int y);

}  // namespace iml::cycles
