#include "iml/core/digraph.hpp"

#include <algorithm>
#include <string>

#include "iml/core/error.hpp"

namespace iml {

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n < 0 || n > 64) fail(ErrorCode::kTooLarge, "digraphs hold at most 64 vertices");
}

Digraph Digraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(ErrorCode::kInvalidArgument, "arc endpoint out of range");
  if (u == v) fail(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
  out_[u] |= bit(v);
  in_[v] |= bit(u);
}

void Digraph::remove_arc(int u, int v) {
  out_[u] &= ~bit(v);
  in_[v] &= ~bit(u);
}

void Digraph::reverse_arc(int u, int v) {
  remove_arc(u, v);
  add_arc(v, u);
}

int Digraph::min_out_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, out_degree(v));
  return n_ == 0 ? 0 : d;
}

int Digraph::min_in_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, in_degree(v));
  return n_ == 0 ? 0 : d;
}

int Digraph::arc_count() const {
  int m = 0;
  for (auto r : out_) m += popcount(r);
  return m;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) for_each_bit(out_[u], [&](int v) { out.emplace_back(u, v); });
  return out;
}

Digraph Digraph::induced(Mask keep) const {
  std::vector<int> idx(n_, -1);
  int k = 0;
  for_each_bit(keep & all(), [&](int v) { idx[v] = k++; });
  Digraph h(k);
  for (auto [u, v] : arcs())
    if (idx[u] >= 0 && idx[v] >= 0) h.add_arc(idx[u], idx[v]);
  return h;
}

Digraph Digraph::permuted(const std::vector<int>& perm) const {
  Digraph h(n_);
  for (auto [u, v] : arcs()) h.add_arc(perm[u], perm[v]);
  return h;
}

Digraph Digraph::reversed() const {
  Digraph h(n_);
  for (auto [u, v] : arcs()) h.add_arc(v, u);
  return h;
}

Graph Digraph::underlying() const {
  Graph g(n_);
  for (auto [u, v] : arcs())
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

bool Digraph::is_tournament() const {
  for (int u = 0; u < n_; ++u)
    if ((out_[u] & in_[u]) != 0 || (out_[u] | in_[u]) != (all() & ~bit(u))) return false;
  return true;
}

bool Digraph::is_regular_tournament() const {
  if (!is_tournament() || n_ % 2 == 0) return false;
  for (int v = 0; v < n_; ++v)
    if (out_degree(v) != (n_ - 1) / 2) return false;
  return true;
}

namespace digraphs {

Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

Digraph directed_path(int n) {
  Digraph d(n);
  for (int v = 0; v + 1 < n; ++v) d.add_arc(v, v + 1);
  return d;
}

Digraph complete(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

Digraph circulant(int n, const std::vector<int>& connection) {
  Digraph d(n);
  for (int v = 0; v < n; ++v)
    for (int s : connection) d.add_arc(v, ((v + s) % n + n) % n);
  return d;
}

Digraph quadratic_residue_tournament(int p) {
  std::vector<int> residues;
  for (int x = 1; x < p; ++x) {
    int r = x * x % p;
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) residues.push_back(r);
  }
  return circulant(p, residues);
}

}  // namespace digraphs

Mask reachable(const std::vector<Mask>& out, int source, Mask allowed) {
  Mask seen = bit(source);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= out[v]; });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool strongly_connected(const std::vector<Mask>& out, Mask vertices) {
  if (popcount(vertices) <= 1) return true;
  int s = lowest_bit(vertices);
  if (reachable(out, s, vertices) != vertices) return false;
  std::vector<Mask> rev(out.size(), 0);
  for (std::size_t u = 0; u < out.size(); ++u)
    if (test(vertices, static_cast<int>(u)))
      for_each_bit(out[u] & vertices, [&](int v) { rev[v] |= bit(static_cast<int>(u)); });
  return reachable(rev, s, vertices) == vertices;
}

bool strongly_connected(const Digraph& d) {
  std::vector<Mask> out(d.order());
  for (int v = 0; v < d.order(); ++v) out[v] = d.out(v);
  return strongly_connected(out, d.all());
}

std::vector<Mask> strong_components(const Digraph& d) {
  int n = d.order();
  std::vector<Mask> out(n), in(n);
  for (int v = 0; v < n; ++v) {
    out[v] = d.out(v);
    in[v] = d.in(v);
  }
  std::vector<Mask> comps;
  Mask left = d.all();
  while (left) {
    int v = lowest_bit(left);
    comps.push_back(reachable(out, v, left) & reachable(in, v, left));
    left &= ~comps.back();
  }
  // Order: a component precedes another if some arc goes from it to the other.
  std::vector<Mask> ordered;
  while (!comps.empty()) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      Mask rest = 0;
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != i) rest |= comps[j];
      bool has_in = false;
      for_each_bit(comps[i], [&](int v) { has_in |= (d.in(v) & rest) != 0; });
      if (!has_in) {
        ordered.push_back(comps[i]);
        comps.erase(comps.begin() + static_cast<long>(i));
        break;
      }
    }
  }
  return ordered;
}

}  // namespace iml
