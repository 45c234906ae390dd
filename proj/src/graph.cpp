#include "iml/core/graph.hpp"

#include <algorithm>
#include <string>

#include "iml/core/error.hpp"

namespace iml {

namespace {
void check_vertex(int n, int v) {
  if (v < 0 || v >= n) fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
}
}  // namespace

Graph::Graph(int n) : n_(n), words_(std::max(1, (n + 63) / 64)) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) fail(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= Mask{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= Mask{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(Mask{1} << (v % 64));
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(Mask{1} << (u % 64));
}

std::span<const std::uint64_t> Graph::row_words(int v) const {
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row_words(v)) d += popcount(w);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::size() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto row = row_words(v);
  for (int w = 0; w < words_; ++w)
    for_each_bit(row[w], [&](int b) { out.push_back(w * 64 + b); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = neighbors(v);
  return out;
}

Graph Graph::induced(Mask keep) const {
  std::vector<int> idx(n_, -1);
  int k = 0;
  for_each_bit(keep & all(), [&](int v) { idx[v] = k++; });
  Graph h(k);
  for (auto [u, v] : edges())
    if (idx[u] >= 0 && idx[v] >= 0) h.add_edge(idx[u], idx[v]);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

int Graph::edges_within(Mask s) const {
  int twice = 0;
  for_each_bit(s, [&](int v) { twice += popcount(row(v) & s); });
  return twice / 2;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph prism(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph mobius_kantor() {
  // Generalized Petersen graph GP(8, 3).
  Graph g(16);
  for (int i = 0; i < 8; ++i) {
    g.add_edge(i, (i + 1) % 8);
    g.add_edge(i, i + 8);
    g.add_edge(8 + i, 8 + (i + 3) % 8);
  }
  return g;
}

Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

Graph blow_up(const Graph& base, int part_size) {
  Graph g(base.order() * part_size);
  for (auto [u, v] : base.edges())
    for (int i = 0; i < part_size; ++i)
      for (int j = 0; j < part_size; ++j) g.add_edge(u * part_size + i, v * part_size + j);
  return g;
}

}  // namespace graphs
}  // namespace iml
