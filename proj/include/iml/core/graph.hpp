#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iml/core/bits.hpp"

namespace iml {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
///
/// Rows are multi-word so the same type serves small exhaustive searches
/// (where `row()` gives the single 64-bit word) and large percolation lattices.
/// Vertex i is bit i of a row.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int words() const { return words_; }
  bool small() const { return n_ <= 64; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;
  int size() const;  // number of edges

  // Single-word row; only valid when small().
  Mask row(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }
  std::span<const std::uint64_t> row_words(int v) const;

  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;  // (u, v) with u < v, lexicographic
  std::vector<std::vector<int>> adjacency_lists() const;

  Mask all() const { return low_mask(n_); }
  Graph induced(Mask keep) const;  // relabels kept vertices in order
  Graph complement() const;
  Graph permuted(std::span<const int> perm) const;  // vertex v -> perm[v]
  int edges_within(Mask s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph prism(int k);  // C_k x K_2
Graph mobius_kantor();
Graph grid(int rows, int cols);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph blow_up(const Graph& base, int part_size);
}  // namespace graphs

}  // namespace iml
