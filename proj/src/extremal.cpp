#include "iml/extremal/extremal.hpp"

#include <algorithm>
#include <map>

#include "iml/coloring/coloring.hpp"
#include "iml/core/error.hpp"
#include "iml/core/structure.hpp"
#include "iml/gen/canonical.hpp"
#include "iml/gen/generate.hpp"

namespace iml::ext {

bool is_free_of(const Graph& g, const std::vector<Graph>& forbidden) {
  for (const auto& f : forbidden)
    if (f.order() <= g.order() && f.size() <= g.size() && color::contains_subgraph(g, f)) return false;
  return true;
}

std::vector<Graph> all_cycles(int max_length) {
  std::vector<Graph> out;
  for (int l = 3; l <= max_length; ++l) out.push_back(graphs::cycle(l));
  return out;
}

TuranResult turan_number(int n, const std::vector<Graph>& forbidden) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative order");
  if (n > 10) fail(ErrorCode::kTooLarge, "Turan search needs n <= 10");
  TuranResult out;
  out.witness = Graph(n);
  for (const auto& g : gen::generate_hereditary(n, [&](const Graph& h) { return is_free_of(h, forbidden); }))
    if (g.size() > out.edges) {
      out.edges = g.size();
      out.witness = g;
    }
  return out;
}

namespace {

int uniform_size(const Hypergraph& h) {
  int k = h.uniformity();
  for (Mask e : h.edges()) {
    if (k == 0) k = popcount(e);
    if (popcount(e) != k) fail(ErrorCode::kInvalidArgument, "hypergraph must be uniform");
  }
  if (k <= 0) fail(ErrorCode::kInvalidArgument, "hypergraph uniformity unknown");
  return k;
}

void check_overlap(int n, int k, int l) {
  if (l < 1 || l >= k) fail(ErrorCode::kInvalidArgument, "overlap must satisfy 1 <= l < k");
  if (n % (k - l) != 0) fail(ErrorCode::kBadDivisibility, "k - l must divide n");
}

std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  for (Mask s = 0; s < bit(n); ++s)
    if (popcount(s) == k) out.push_back(s);
  return out;
}

}  // namespace

std::vector<Mask> overlap_cycle_edges(const std::vector<int>& order, int k, int l) {
  const int n = static_cast<int>(order.size()), step = k - l;
  std::vector<Mask> out;
  for (int s = 0; s < n; s += step) {
    Mask e = 0;
    for (int i = 0; i < k; ++i) e |= bit(order[(s + i) % n]);
    out.push_back(e);
  }
  return out;
}

std::optional<std::vector<int>> l_hamiltonian_cycle(const Hypergraph& h, int l) {
  const int n = h.order(), k = uniform_size(h);
  check_overlap(n, k, l);
  const int step = k - l;
  // Consecutive edges share exactly l vertices only when k + step <= n.
  if (k + step > n) return std::nullopt;
  std::vector<Mask> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  auto has = [&](Mask e) { return std::binary_search(edges.begin(), edges.end(), e); };
  std::vector<int> order(n, -1);
  // Rotating by a multiple of step preserves the edge set, so vertex 0 sits
  // among the first step positions.
  auto solve = [&](auto& self, int p, Mask used) -> bool {
    if (p == n) {
      for (int s = 0; s < n; s += step)
        if (s + k > n) {
          Mask e = 0;
          for (int i = 0; i < k; ++i) e |= bit(order[(s + i) % n]);
          if (!has(e)) return false;
        }
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (test(used, v)) continue;
      if (p == step - 1 && !test(used, 0) && v != 0) continue;
      order[p] = v;
      bool ok = true;
      int s = p - k + 1;
      if (s >= 0 && s % step == 0) {
        Mask e = 0;
        for (int i = s; i <= p; ++i) e |= bit(order[i]);
        ok = has(e);
      }
      if (ok && self(self, p + 1, used | bit(v))) return true;
    }
    return false;
  };
  if (!solve(solve, 0, 0)) return std::nullopt;
  return order;
}

bool is_l_hamiltonian(const Hypergraph& h, int l) { return l_hamiltonian_cycle(h, l).has_value(); }

bool is_l_ham_saturated(const Hypergraph& h, int l) {
  if (is_l_hamiltonian(h, l)) return false;
  const int k = uniform_size(h);
  for (Mask e : k_subsets(h.order(), k)) {
    if (h.has_edge(e)) continue;
    Hypergraph plus = h;
    plus.add_edge(e);
    if (!is_l_hamiltonian(plus, l)) return false;
  }
  return true;
}

SatResult sat_search(int n, int k, int l) {
  if (k < 2) fail(ErrorCode::kInvalidArgument, "k must be at least 2");
  check_overlap(n, k, l);
  if ((k == 2 && n > 9) || (k > 2 && n > 6)) fail(ErrorCode::kTooLarge, "saturation search is exhaustive");
  SatResult out;
  if (k == 2) {
    auto graphs_n = gen::generate_graphs(gen::GenSpec{n});
    std::stable_sort(graphs_n.begin(), graphs_n.end(), [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
    for (const auto& g : graphs_n) {
      if (out.edges >= 0 && g.size() > out.edges) break;
      std::vector<Mask> edges;
      for (auto [u, v] : g.edges()) edges.push_back(bit(u) | bit(v));
      Hypergraph h(n, edges, 2);
      ++out.classes_checked;
      if (out.edges < 0 && is_l_ham_saturated(h, l)) {
        out.edges = g.size();
        out.witness = h;
      }
    }
    return out;
  }
  // Isomorphism classes of k-graphs with m edges, keyed by the canonical form
  // of the vertex/edge incidence graph with the two sides coloured apart.
  auto certificate = [&](const std::vector<Mask>& edges) {
    const int m = static_cast<int>(edges.size());
    Graph inc(n + m);
    for (int i = 0; i < m; ++i) for_each_bit(edges[i], [&](int v) { inc.add_edge(v, n + i); });
    return gen::canonical_form(inc, {low_mask(n), low_mask(n + m) & ~low_mask(n)}).certificate;
  };
  const auto all = k_subsets(n, k);
  std::map<std::string, std::vector<Mask>> level{{certificate({}), {}}};
  while (!level.empty()) {
    for (const auto& [cert, edges] : level) {
      ++out.classes_checked;
      Hypergraph h(n, edges, k);
      if (is_l_ham_saturated(h, l)) {
        out.edges = static_cast<int>(edges.size());
        out.witness = h;
        return out;
      }
    }
    std::map<std::string, std::vector<Mask>> next;
    for (const auto& [cert, edges] : level)
      for (Mask e : all) {
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        auto bigger = edges;
        bigger.push_back(e);
        std::sort(bigger.begin(), bigger.end());
        next.emplace(certificate(bigger), bigger);
      }
    level = std::move(next);
  }
  return out;
}

Bipartization bipartization_cost(const Graph& g) {
  const int n = g.order();
  if (n > 24) fail(ErrorCode::kTooLarge, "max-cut enumeration needs n <= 24");
  Bipartization out;
  out.clique_number = n ? static_cast<int>(max_clique(g).size()) : 0;
  out.triangle_free_bound = Rational(n * n, 25);
  int r = out.clique_number + 1;
  if (r >= 2) out.kr_free_bound = Rational((r - 2) * (r - 2) * n * n, 4 * (r - 1) * (r - 1));
  if (n == 0) return out;
  std::vector<Mask> adj(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.row(v);
    deg[v] = popcount(adj[v]);
  }
  // Gray code over the sides of vertices 0..n-2; vertex n-1 stays on side 0.
  Mask side = 0, best_side = 0;
  int cut = 0, best = 0;
  const Mask full = low_mask(n);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (n - 1)); ++i) {
    int v = lowest_bit(i);
    Mask same = test(side, v) ? side : full & ~side;
    int s = popcount(adj[v] & same);
    cut += s - (deg[v] - s);
    side ^= bit(v);
    if (cut > best) {
      best = cut;
      best_side = side;
    }
  }
  out.deletions = g.size() - best;
  out.side = best_side;
  return out;
}

int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

int triple_index(int n, int a, int b, int c) {
  int t[3] = {a, b, c};
  std::sort(t, t + 3);
  if (t[0] < 0 || t[2] >= n || t[0] == t[1] || t[1] == t[2]) fail(ErrorCode::kInvalidArgument, "not a triple of [n]");
  // Colex rank.
  return t[2] * (t[2] - 1) * (t[2] - 2) / 6 + t[1] * (t[1] - 1) / 2 + t[0];
}

RamseyVerdict hyper_ramsey_witness(int n, const std::vector<int>& colour, int t) {
  if (n > 13) fail(ErrorCode::kTooLarge, "Ramsey witness search needs n <= 13");
  if (static_cast<int>(colour.size()) != triple_count(n)) fail(ErrorCode::kInvalidArgument, "one colour per triple");
  RamseyVerdict out;
  std::vector<Mask> red;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (colour[triple_index(n, a, b, c)] == 0) red.push_back(bit(a) | bit(b) | bit(c));
  const std::size_t r = red.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (popcount(red[i] & red[j]) != 1) continue;
      for (std::size_t l = j + 1; l < r; ++l)
        if (popcount(red[i] & red[l]) == 1 && popcount(red[j] & red[l]) == 1 && (red[i] & red[j] & red[l]) == 0) {
          out.kind = RamseyVerdict::Kind::kRedTriangle;
          out.red_edges = {red[i], red[j], red[l]};
          return out;
        }
    }
  std::vector<int> chosen;
  auto grow = [&](auto& self, int from) -> bool {
    if (static_cast<int>(chosen.size()) == t) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (std::size_t x = 0; x < chosen.size() && ok; ++x)
        for (std::size_t y = x + 1; y < chosen.size() && ok; ++y)
          ok = colour[triple_index(n, chosen[x], chosen[y], v)] == 1;
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (t >= 0 && grow(grow, 0)) {
    out.kind = RamseyVerdict::Kind::kBlueClique;
    out.blue_clique = mask_of(chosen);
  }
  return out;
}

}  // namespace iml::ext
