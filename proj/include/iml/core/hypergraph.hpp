#pragma once

#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/graph.hpp"

namespace iml {

/// Hypergraph on at most 64 vertices; edges are vertex bitmasks and may repeat.
/// `uniformity` is the common edge size, or 0 for a non-uniform hypergraph.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<Mask> edges, int uniformity = 0);

  int order() const { return n_; }
  int uniformity() const { return k_; }
  const std::vector<Mask>& edges() const { return edges_; }
  int rank() const;  // largest edge size
  bool has_edge(Mask e) const;
  void add_edge(Mask e);

  // Replace every edge by a clique.
  Graph clique_expansion() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> edges_;
  int k_ = 0;
};

/// Family of distinct subsets of a ground set of size at most 64.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, std::vector<Mask> sets);

  int ground_size() const { return n_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool is_antichain() const;
  bool is_k_intersecting(int k) const;
  int diameter() const;  // max |A xor B|

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> sets_;
};

}  // namespace iml
