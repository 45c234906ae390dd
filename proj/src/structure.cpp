#include "iml/core/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "iml/core/error.hpp"
#include "iml/core/flow.hpp"

namespace iml {

std::vector<int> component_labels(const Graph& g) {
  int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int local_edge_connectivity(const Graph& g, int s, int t) {
  FlowNetwork net(g.order());
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  return static_cast<int>(net.max_flow(s, t));
}

int local_vertex_connectivity(const Graph& g, int s, int t) {
  // Vertex v splits into v_in = 2v and v_out = 2v+1.
  int n = g.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, n);
    net.add_arc(2 * v + 1, 2 * u, n);
  }
  return static_cast<int>(net.max_flow(2 * s + 1, 2 * t));
}

int edge_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  int best = g.min_degree();
  for (int v = 1; v < n && best > 0; ++v) best = std::min(best, local_edge_connectivity(g, 0, v));
  return best;
}

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t));
  return best;
}

StructureReport structure_report(const Graph& g) {
  StructureReport r;
  r.max_degree = g.max_degree();
  r.min_degree = g.min_degree();
  r.bipartite = is_bipartite(g);
  r.components = component_count(g);
  r.vertex_connectivity = vertex_connectivity(g);
  r.edge_connectivity = edge_connectivity(g);
  return r;
}

namespace {

// Maximizes den * e(S) - num * |S| over vertex sets S by a closure min-cut.
// Returns the maximizing set (possibly empty) as a boolean vector.
std::vector<bool> best_closure(const Graph& g, const std::vector<Edge>& edges, std::int64_t num,
                               std::int64_t den) {
  int n = g.order();
  int m = static_cast<int>(edges.size());
  int source = n + m, sink = n + m + 1;
  FlowNetwork net(n + m + 2);
  for (int i = 0; i < m; ++i) {
    net.add_arc(source, n + i, den);
    net.add_arc(n + i, edges[i].first, FlowNetwork::kInfinity);
    net.add_arc(n + i, edges[i].second, FlowNetwork::kInfinity);
  }
  for (int v = 0; v < n; ++v) net.add_arc(v, sink, num);
  net.max_flow(source, sink);
  auto side = net.source_side(source);
  side.resize(n);
  return side;
}

}  // namespace

Rational mad(const Graph& g) {
  if (g.order() < 1) fail(ErrorCode::kInvalidArgument, "mad needs at least one vertex");
  auto edges = g.edges();
  std::int64_t num = static_cast<std::int64_t>(edges.size());
  std::int64_t den = g.order();
  // Dinkelbach iteration on the density e(S)/|S|; each round strictly improves.
  while (true) {
    auto side = best_closure(g, edges, num, den);
    std::int64_t vs = std::count(side.begin(), side.end(), true);
    std::int64_t es = 0;
    for (auto [u, v] : edges) es += (side[u] && side[v]) ? 1 : 0;
    if (vs == 0 || es * den <= num * vs) break;
    num = es;
    den = vs;
  }
  return Rational(2 * num, den);
}

Mask densest_subgraph(const Graph& g) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "densest_subgraph returns a 64-bit mask");
  auto edges = g.edges();
  std::int64_t num = static_cast<std::int64_t>(edges.size()), den = g.order();
  Mask best = g.all();
  while (true) {
    auto side = best_closure(g, edges, num, den);
    Mask cand = 0;
    for (int v = 0; v < g.order(); ++v)
      if (side[v]) cand |= bit(v);
    std::int64_t vs = popcount(cand), es = g.edges_within(cand);
    if (vs == 0 || es * den <= num * vs) break;
    num = es;
    den = vs;
    best = cand;
  }
  return best;
}

namespace {

using Row = std::vector<std::uint64_t>;

inline bool row_test(const Row& r, int i) { return (r[i >> 6] >> (i & 63)) & 1U; }
inline void row_reset(Row& r, int i) { r[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool row_empty(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint64_t w) { return w == 0; });
}
inline int row_first(const Row& r) {
  for (std::size_t w = 0; w < r.size(); ++w)
    if (r[w]) return static_cast<int>(w * 64) + std::countr_zero(r[w]);
  return -1;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Row> adj, int n) : adj_(std::move(adj)), n_(n) {}

  std::vector<int> run() {
    Row all((n_ + 63) / 64 + (n_ == 0), 0);
    for (int v = 0; v < n_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, Row p) {
    std::vector<int> order, colour;
    colour_sort(p, order, colour);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + colour[i] <= static_cast<int>(best_.size())) return;
      int v = order[i];
      current.push_back(v);
      Row np(p.size());
      for (std::size_t w = 0; w < p.size(); ++w) np[w] = p[w] & adj_[v][w];
      if (row_empty(np)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, np);
      }
      current.pop_back();
      row_reset(p, v);
    }
  }

  void colour_sort(const Row& p, std::vector<int>& order, std::vector<int>& colour) {
    Row uncoloured = p;
    int k = 0;
    while (!row_empty(uncoloured)) {
      ++k;
      Row q = uncoloured;
      int v;
      while ((v = row_first(q)) >= 0) {
        row_reset(uncoloured, v);
        row_reset(q, v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~adj_[v][w];
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  std::vector<Row> adj_;
  int n_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  int n = g.order();
  if (n == 0) return {};
  // Degeneracy order, highest-core vertices first so colour classes stay small.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> peel;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    peel.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  std::vector<int> order(peel.rbegin(), peel.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  int words = (n + 63) / 64;
  std::vector<Row> adj(n, Row(words, 0));
  for (auto [u, v] : g.edges()) {
    adj[pos[u]][pos[v] >> 6] |= std::uint64_t{1} << (pos[v] & 63);
    adj[pos[v]][pos[u] >> 6] |= std::uint64_t{1} << (pos[u] & 63);
  }
  auto clique = CliqueSearch(std::move(adj), n).run();
  for (int& v : clique) v = order[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

Mask max_independent_set(const Graph& g) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "independent-set masks hold at most 64 vertices");
  if (g.order() < 1) fail(ErrorCode::kInvalidArgument, "empty vertex set");
  return mask_of(max_clique(g.complement()));
}

int biclique_number(const Graph& g) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "biclique search holds at most 64 vertices");
  if (g.size() == 0) fail(ErrorCode::kEmptyGraph, "biclique number needs an edge");
  int n = g.order();
  int best = 2;
  // Extend one side A in increasing vertex order while its common neighbourhood is nonempty.
  std::function<void(int, int, Mask)> grow = [&](int next, int a, Mask common) {
    best = std::max(best, a + popcount(common));
    for (int v = next; v < n; ++v) {
      Mask c = common & g.row(v);
      if (c) grow(v + 1, a + 1, c);
    }
  };
  for (int v = 0; v < n; ++v)
    if (g.row(v)) grow(v + 1, 1, g.row(v));
  return best;
}

}  // namespace iml
