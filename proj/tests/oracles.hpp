#pragma once

// Brute-force reference computations used only by the test suites. Each one
// enumerates the definition directly and shares no code path with the library
// algorithm it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml::oracle {

inline bool connected_on(const Graph& g, Mask keep) {
  if (keep == 0) return true;
  Mask seen = bit(lowest_bit(keep)), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.row(v); });
    next &= keep & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == keep;
}

inline Rational mad(const Graph& g) {
  Rational best = 0;
  for (Mask s = 1; s < bit(g.order()); ++s) {
    Rational d(2 * g.edges_within(s), popcount(s));
    if (d > best) best = d;
  }
  return best;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (Mask s = 0; s < bit(g.order()); ++s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok &= (g.row(v) & s) == 0; });
    if (ok) best = std::max(best, popcount(s));
  }
  return best;
}

inline int biclique(const Graph& g) {
  int n = g.order(), best = 0;
  for (Mask a = 1; a < bit(n); ++a)
    for (Mask b = 1; b < bit(n); ++b) {
      if (a & b) continue;
      bool ok = true;
      for_each_bit(a, [&](int v) { ok &= (g.row(v) & b) == b; });
      if (ok) best = std::max(best, popcount(a) + popcount(b));
    }
  return best;
}

// Smallest vertex set whose removal disconnects g (n-1 for complete graphs).
inline int vertex_connectivity(const Graph& g) {
  int n = g.order();
  int best = n - 1;
  for (Mask cut = 0; cut < bit(n); ++cut) {
    if (popcount(cut) >= best) continue;
    Mask rest = g.all() & ~cut;
    if (popcount(rest) >= 2 && !connected_on(g, rest)) best = popcount(cut);
  }
  return best;
}

inline long long automorphism_count(const Graph& g) {
  int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.has_edge(u, v) == g.has_edge(p[u], p[v]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Lexicographically least adjacency bitstring over all relabelings.
inline std::vector<bool> brute_canonical(const Graph& g) {
  int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) code.push_back(g.has_edge(p[u], p[v]));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if ((code >> idx) & 1U) g.add_edge(u, v);
  return g;
}

// Count simple cycles of length len by enumerating vertex sequences.
inline long long cycles_of_length(const Graph& g, int len) {
  int n = g.order();
  long long count = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self, Mask used) -> void {
    if (static_cast<int>(seq.size()) == len) {
      if (g.has_edge(seq.back(), seq.front())) ++count;
      return;
    }
    for (int v = seq.front() + 1; v < n; ++v)
      if (!test(used, v) && g.has_edge(seq.back(), v)) {
        seq.push_back(v);
        self(self, used | bit(v));
        seq.pop_back();
      }
  };
  for (int s = 0; s < n; ++s) {
    seq = {s};
    rec(rec, bit(s));
  }
  return count / 2;  // each cycle seen in both directions from its minimum
}


// Hamilton cycles by scanning permutations that fix vertex 0; returns the
// total and, per vertex pair, the number of cycles using that edge.
struct HamTally {
  long long total = 0;
  std::vector<std::vector<long long>> through;
};

inline HamTally ham_by_permutations(const Graph& g) {
  int n = g.order();
  HamTally t;
  t.through.assign(n, std::vector<long long>(n, 0));
  if (n < 3) return t;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    if (p[1] > p[n - 1]) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.has_edge(p[i], p[(i + 1) % n]);
    if (!ok) continue;
    ++t.total;
    for (int i = 0; i < n; ++i) {
      int a = p[i], b = p[(i + 1) % n];
      ++t.through[a][b];
      ++t.through[b][a];
    }
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return t;
}

// Longest simple directed (x,y)-path by exhaustive DFS; -1 when none exists.
inline int longest_path_dfs(const Digraph& d, int x, int y) {
  int best = -1;
  auto rec = [&](auto&& self, int v, Mask used, int len) -> void {
    if (v == y) {
      best = std::max(best, len);
      return;
    }
    for (int w = 0; w < d.order(); ++w)
      if (!test(used, w) && d.has_arc(v, w)) self(self, w, used | bit(w), len + 1);
  };
  rec(rec, x, bit(x), 0);
  return best;
}

// Tries every assignment of k colours to the vertices.
inline bool colourable_by_enumeration(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> c(n, 0);
  auto edges = g.edges();
  while (true) {
    bool ok = true;
    for (auto [u, v] : edges) ok &= c[u] != c[v];
    if (ok) return true;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

inline int chromatic_by_enumeration(const Graph& g) {
  int k = 0;
  while (!colourable_by_enumeration(g, k)) ++k;
  return k;
}

// Some injective map of the pattern into `allowed` keeps every pattern edge.
inline bool copy_by_maps(const Graph& host, Mask allowed, const Graph& pattern) {
  const int p = pattern.order();
  std::vector<int> img(p, -1);
  auto rec = [&](auto&& self, int i, Mask used) -> bool {
    if (i == p) {
      for (auto [u, v] : pattern.edges())
        if (!host.has_edge(img[u], img[v])) return false;
      return true;
    }
    for (Mask rest = allowed & ~used; rest; rest &= rest - 1) {
      img[i] = lowest_bit(rest);
      if (self(self, i + 1, used | bit(img[i]))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// Vertex r-colourings of F, each class checked for a copy of G.
inline bool arrows_by_enumeration(const Graph& f, const Graph& g, int r) {
  const int n = f.order();
  std::vector<int> c(n, 0);
  while (true) {
    bool mono = false;
    for (int col = 0; col < r && !mono; ++col) {
      Mask cls = 0;
      for (int v = 0; v < n; ++v)
        if (c[v] == col) cls |= bit(v);
      mono = copy_by_maps(f, cls, g);
    }
    if (!mono) return false;
    int i = 0;
    while (i < n && ++c[i] == r) c[i++] = 0;
    if (i == n) return true;
  }
}

// Whether the vertex set s carries a cycle of colour col (sets of size <= 2
// always count), by trying every cyclic order.
inline bool mono_cycle_on(const std::vector<std::vector<int>>& colour, Mask s, int col) {
  auto vs = bits_of(s);
  if (vs.size() <= 2) return true;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i) ok = colour[vs[i]][vs[(i + 1) % vs.size()]] == col;
    if (ok) return true;
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return false;
}

// Fewest blocks over all set partitions whose blocks are monochromatic cycles.
inline int mono_cycle_partition_brute(const std::vector<std::vector<int>>& colour, int palette) {
  const int n = static_cast<int>(colour.size());
  int best = n + 1;
  std::vector<int> block(n, 0);
  auto rec = [&](auto&& self, int v, int blocks) -> void {
    if (blocks >= best) return;
    if (v == n) {
      bool ok = true;
      for (int b = 0; b < blocks && ok; ++b) {
        Mask s = 0;
        for (int u = 0; u < n; ++u)
          if (block[u] == b) s |= bit(u);
        bool any = false;
        for (int col = 0; col < palette && !any; ++col) any = mono_cycle_on(colour, s, col);
        ok = any;
      }
      if (ok) best = blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[v] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace iml::oracle
