#include "iml/core/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "iml/core/error.hpp"

namespace iml {

Hypergraph::Hypergraph(int n, std::vector<Mask> edges, int uniformity) : n_(n), k_(uniformity) {
  if (n < 0 || n > 64) fail(ErrorCode::kTooLarge, "hypergraphs hold at most 64 vertices");
  for (Mask e : edges) add_edge(e);
}

void Hypergraph::add_edge(Mask e) {
  if ((e & ~low_mask(n_)) != 0) fail(ErrorCode::kInvalidArgument, "edge outside the vertex set");
  if (k_ > 0 && popcount(e) != k_) fail(ErrorCode::kInvalidArgument, "edge size differs from uniformity");
  edges_.push_back(e);
}

int Hypergraph::rank() const {
  int r = 0;
  for (Mask e : edges_) r = std::max(r, popcount(e));
  return r;
}

bool Hypergraph::has_edge(Mask e) const { return std::find(edges_.begin(), edges_.end(), e) != edges_.end(); }

Graph Hypergraph::clique_expansion() const {
  Graph g(n_);
  for (Mask e : edges_)
    for_each_bit(e, [&](int u) {
      for_each_bit(e & ~low_mask(u + 1), [&](int v) {
        if (!g.has_edge(u, v)) g.add_edge(u, v);
      });
    });
  return g;
}

SetFamily::SetFamily(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > 64) fail(ErrorCode::kTooLarge, "set families hold a ground set of at most 64");
  std::unordered_set<Mask> seen;
  for (Mask s : sets_) {
    if ((s & ~low_mask(n)) != 0) fail(ErrorCode::kInvalidArgument, "set outside the ground set");
    if (!seen.insert(s).second) fail(ErrorCode::kInvalidArgument, "duplicate set in family");
  }
}

bool SetFamily::is_antichain() const {
  for (Mask a : sets_)
    for (Mask b : sets_)
      if (a != b && (a & b) == a) return false;
  return true;
}

bool SetFamily::is_k_intersecting(int k) const {
  for (Mask a : sets_)
    for (Mask b : sets_)
      if (popcount(a & b) < k) return false;
  return true;
}

int SetFamily::diameter() const {
  int d = 0;
  for (Mask a : sets_)
    for (Mask b : sets_) d = std::max(d, popcount(a ^ b));
  return d;
}

}  // namespace iml
