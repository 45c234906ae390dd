#pragma once

#include <utility>
#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/graph.hpp"

namespace iml {

using Arc = std::pair<int, int>;

/// Loopless digraph on at most 64 vertices; arcs as out- and in-neighbour bitsets.
/// Digons (u->v and v->u) are allowed; tournaments forbid them.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_arcs(int n, const std::vector<Arc>& arcs);

  int order() const { return n_; }
  Mask all() const { return low_mask(n_); }

  bool has_arc(int u, int v) const { return test(out_[u], v); }
  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  void reverse_arc(int u, int v);

  Mask out(int v) const { return out_[v]; }
  Mask in(int v) const { return in_[v]; }
  int out_degree(int v) const { return popcount(out_[v]); }
  int in_degree(int v) const { return popcount(in_[v]); }
  int min_out_degree() const;
  int min_in_degree() const;
  int arc_count() const;

  std::vector<Arc> arcs() const;  // lexicographic (tail, head)
  Digraph induced(Mask keep) const;
  Digraph permuted(const std::vector<int>& perm) const;
  Digraph reversed() const;
  Graph underlying() const;

  bool is_tournament() const;
  bool is_regular_tournament() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

namespace digraphs {
Digraph directed_cycle(int n);
Digraph directed_path(int n);
Digraph complete(int n);  // both arcs between every pair
Digraph transitive_tournament(int n);  // i -> j iff i < j
// Circulant tournament: i -> i+s for s in the connection set (mod n).
Digraph circulant(int n, const std::vector<int>& connection);
Digraph quadratic_residue_tournament(int p);
}  // namespace digraphs

// Vertices reachable from `source` using only the given arc rows.
Mask reachable(const std::vector<Mask>& out, int source, Mask allowed);
bool strongly_connected(const std::vector<Mask>& out, Mask vertices);
bool strongly_connected(const Digraph& d);
// Strongly connected components in topological order (sources first).
std::vector<Mask> strong_components(const Digraph& d);

}  // namespace iml
