#include "iml/coloring/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "iml/core/error.hpp"
#include "iml/core/structure.hpp"

namespace iml::color {

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(std::max(k, 0)), 0);
  for (int c : colour)
    if (c >= 0 && c < k) ++sizes[c];
  return sizes;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colour.size()) != g.order()) return false;
  for (int x : c.colour)
    if (x < 0 || x >= c.k) return false;
  for (auto [u, v] : g.edges())
    if (c.colour[u] == c.colour[v]) return false;
  return true;
}

bool is_equitable(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  auto sizes = c.class_sizes();
  if (sizes.empty()) return g.order() == 0;
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

bool is_proper_edge_colouring(const Graph& g, const std::vector<int>& edge_colour) {
  auto edges = g.edges();
  if (edge_colour.size() != edges.size()) return false;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (edge_colour[a] < 0) return false;
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      auto [u, v] = edges[a];
      auto [x, y] = edges[b];
      bool touch = u == x || u == y || v == x || v == y;
      if (touch && edge_colour[a] == edge_colour[b]) return false;
    }
  }
  return true;
}

namespace {

void check_small(const Graph& g, const char* what) {
  if (!g.small()) fail(ErrorCode::kTooLarge, std::string(what) + " needs at most 64 vertices");
}

// DSATUR backtracking: branch on the uncoloured vertex seeing the most colours
// (ties: most uncoloured neighbours, then least index); a new colour is only
// ever the next unused one.
class Colourer {
 public:
  Colourer(const Graph& g, int k) : n_(g.order()), k_(k), adj_(n_), col_(n_, -1), cls_(k, 0) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row(v);
  }

  bool run() { return solve(0, 0); }
  const std::vector<int>& colours() const { return col_; }

 private:
  bool solve(int done, int used) {
    if (done == n_) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    Mask uncoloured = 0;
    for (int v = 0; v < n_; ++v)
      if (col_[v] < 0) uncoloured |= bit(v);
    for_each_bit(uncoloured, [&](int v) {
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (cls_[c] & adj_[v]) ? 1 : 0;
      int deg = popcount(adj_[v] & uncoloured);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    int top = std::min(used + 1, k_);
    for (int c = 0; c < top; ++c) {
      if (cls_[c] & adj_[best]) continue;
      col_[best] = c;
      cls_[c] |= bit(best);
      if (solve(done + 1, std::max(used, c + 1))) return true;
      cls_[c] &= ~bit(best);
      col_[best] = -1;
    }
    return false;
  }

  int n_, k_;
  std::vector<Mask> adj_;
  std::vector<int> col_;
  std::vector<Mask> cls_;
};

Coloring verified(const Graph& g, Coloring c) {
  if (!is_proper(g, c)) throw std::logic_error("colouring failed the properness check");
  return c;
}

}  // namespace

std::optional<Coloring> k_colouring(const Graph& g, int k) {
  check_small(g, "k_colouring");
  if (g.order() == 0) return Coloring{{}, std::max(k, 0)};
  if (k <= 0) return std::nullopt;
  Colourer c(g, k);
  if (!c.run()) return std::nullopt;
  return verified(g, Coloring{c.colours(), k});
}

Coloring optimal_colouring(const Graph& g) {
  check_small(g, "chromatic_number");
  if (g.order() == 0) return {};
  int lo = static_cast<int>(max_clique(g).size());
  for (int k = std::max(lo, 1);; ++k)
    if (auto c = k_colouring(g, k)) return *c;
}

int chromatic_number(const Graph& g) { return optimal_colouring(g).k; }

std::optional<std::vector<int>> edge_colouring(const Graph& g, int colours, const std::vector<int>& fixed) {
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (colours > 64) fail(ErrorCode::kTooLarge, "at most 64 edge colours");
  if (!fixed.empty() && static_cast<int>(fixed.size()) != m)
    fail(ErrorCode::kInvalidArgument, "one fixed entry per edge");
  std::vector<int> col(m, -1);
  std::vector<Mask> used(g.order(), 0);
  Mask seen = 0;
  const Mask full = low_mask(colours);
  for (int e = 0; e < m && !fixed.empty(); ++e) {
    int c = fixed[e];
    if (c < 0) continue;
    auto [u, v] = edges[e];
    if (c >= colours || (used[u] | used[v]) & bit(c)) return std::nullopt;
    col[e] = c;
    used[u] |= bit(c);
    used[v] |= bit(c);
    seen |= bit(c);
  }
  // Branch on the edge with fewest free colours; colours never used so far are
  // interchangeable, so only the least of them is tried.
  auto solve = [&](auto& self) -> bool {
    int pick = -1, fewest = 65;
    for (int e = 0; e < m; ++e) {
      if (col[e] >= 0) continue;
      int free = popcount(~(used[edges[e].first] | used[edges[e].second]) & full);
      if (free < fewest) {
        fewest = free;
        pick = e;
      }
    }
    if (pick < 0) return true;
    if (fewest == 0) return false;
    auto [u, v] = edges[pick];
    Mask avail = ~(used[u] | used[v]) & full;
    Mask fresh = ~seen & full;
    if (fresh) avail &= seen | (fresh & (~fresh + 1));
    for (Mask rest = avail; rest; rest &= rest - 1) {
      int c = lowest_bit(rest);
      Mask before = seen;
      col[pick] = c;
      used[u] |= bit(c);
      used[v] |= bit(c);
      seen |= bit(c);
      if (self(self)) return true;
      seen = before;
      used[u] &= ~bit(c);
      used[v] &= ~bit(c);
      col[pick] = -1;
    }
    return false;
  };
  if (!solve(solve)) return std::nullopt;
  if (!is_proper_edge_colouring(g, col)) throw std::logic_error("edge colouring failed its check");
  return col;
}

EdgeClass edge_chromatic_class(const Graph& g) {
  EdgeClass out;
  out.max_degree = g.order() ? g.max_degree() : 0;
  for (int c = out.max_degree;; ++c) {
    if (auto col = edge_colouring(g, c)) {
      out.chromatic_index = c;
      out.colouring = *col;
      break;
    }
  }
  out.edge_class = out.chromatic_index == out.max_degree ? 1 : 2;
  return out;
}

std::optional<Mask> has_overfull_subgraph(const Graph& g) {
  const int n = g.order();
  if (n > 24) fail(ErrorCode::kTooLarge, "overfull scan is exhaustive over subsets; n <= 24");
  if (n < 3) return std::nullopt;
  const long long delta = g.max_degree();
  std::vector<Mask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int size = popcount(s);
    if (size < 3 || size % 2 == 0) continue;
    long long twice = 0;
    for_each_bit(s, [&](int v) { twice += popcount(adj[v] & s); });
    if (twice / 2 > delta * (size - 1) / 2) return s;
  }
  return std::nullopt;
}

int ore_degree(const Graph& g) {
  int best = 0;
  for (auto [u, v] : g.edges()) best = std::max(best, g.degree(u) + g.degree(v));
  return best;
}

namespace {

// Colour classes with per-vertex counts of neighbours in each class.
struct ClassState {
  int k;
  std::vector<std::vector<int>> adj;
  std::vector<int> col;
  std::vector<std::vector<int>> cnt;

  ClassState(int n, int k_) : k(k_), adj(n), col(n, -1), cnt(n, std::vector<int>(k_, 0)) {}

  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    if (col[u] >= 0) ++cnt[v][col[u]];
    if (col[v] >= 0) ++cnt[u][col[v]];
  }
  void set(int v, int c) {
    if (col[v] >= 0)
      for (int w : adj[v]) --cnt[w][col[v]];
    col[v] = c;
    if (c >= 0)
      for (int w : adj[v]) ++cnt[w][c];
  }
};

// Accessibility repair: classes form a digraph with C -> D when some vertex of
// C has no neighbour in D. Shifting one such vertex along each arc of a
// shortest path from `big` to `small` moves the surplus across.
bool shift_along_path(ClassState& s, int big, int small) {
  const int n = static_cast<int>(s.col.size());
  std::vector<std::vector<int>> witness(s.k, std::vector<int>(s.k, -1));
  for (int y = 0; y < n; ++y)
    for (int d = 0; d < s.k; ++d)
      if (d != s.col[y] && s.cnt[y][d] == 0 && witness[s.col[y]][d] < 0) witness[s.col[y]][d] = y;
  std::vector<int> prev(s.k, -2);
  std::vector<int> queue{big};
  prev[big] = -1;
  for (std::size_t head = 0; head < queue.size() && prev[small] == -2; ++head) {
    int c = queue[head];
    for (int d = 0; d < s.k; ++d)
      if (prev[d] == -2 && witness[c][d] >= 0) {
        prev[d] = c;
        queue.push_back(d);
      }
  }
  if (prev[small] == -2) return false;
  std::vector<int> path;
  for (int c = small; c != -1; c = prev[c]) path.push_back(c);
  std::reverse(path.begin(), path.end());
  std::vector<int> movers;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) movers.push_back(witness[path[i]][path[i + 1]]);
  for (std::size_t i = 0; i < movers.size(); ++i) s.set(movers[i], path[i + 1]);
  return true;
}

Coloring checked_equitable(const Graph& g, Coloring c) {
  if (!is_equitable(g, c)) throw std::logic_error("colouring failed the equitability check");
  return c;
}

}  // namespace

std::optional<Coloring> exact_equitable_colouring(const Graph& g, int k) {
  const int n = g.order();
  if (k <= 0) return n == 0 ? std::optional<Coloring>(Coloring{{}, 0}) : std::nullopt;
  const int q = n / k, big_allowed = n % k;
  ClassState s(n, k);
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  std::vector<int> size(k, 0);
  int big = 0, used = 0;
  auto solve = [&](auto& self, int done) -> bool {
    if (done == n) return true;
    int deficit = 0;
    for (int c = 0; c < k; ++c) deficit += std::max(0, q - size[c]);
    if (deficit > n - done) return false;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (s.col[v] >= 0) continue;
      int sat = 0, deg = 0;
      for (int c = 0; c < k; ++c) sat += s.cnt[v][c] > 0;
      for (int w : s.adj[v]) deg += s.col[w] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int top = std::min(used + 1, k);
    for (int c = 0; c < top; ++c) {
      if (s.cnt[pick][c] > 0) continue;
      if (size[c] == q + 1 || (size[c] == q && big == big_allowed)) continue;
      bool grows_big = size[c] == q;
      int before = used;
      s.set(pick, c);
      ++size[c];
      big += grows_big;
      used = std::max(used, c + 1);
      if (self(self, done + 1)) return true;
      used = before;
      big -= grows_big;
      --size[c];
      s.set(pick, -1);
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return checked_equitable(g, Coloring{s.col, k});
}

EquitableResult equitable_coloring(const Graph& g, int k, bool allow_exact) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");
  const int n = g.order();
  const int delta = n ? g.max_degree() : 0;
  auto exact = [&]() {
    auto c = exact_equitable_colouring(g, k);
    if (!c) fail(ErrorCode::kUnsatisfiable, "no equitable colouring exists");
    return EquitableResult{*c, EquitableMethod::kExactSearch};
  };
  if (delta >= k) {
    if (ore_degree(g) < 2 * k && allow_exact) return exact();
    fail(ErrorCode::kPreconditionUnmet, "needs max degree < k, or Ore degree < 2k with exact search allowed");
  }

  // Pad with a clique on the missing vertices so every class ends with the same
  // size; the padding lands in distinct classes and is dropped at the end.
  const int pad = (k - n % k) % k, total = n + pad;
  ClassState s(total, k);
  for (int v = 0; v < total; ++v) s.set(v, v % k);
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int a = n; a < total; ++a)
    for (int b = a + 1; b < total; ++b) edges.emplace_back(a, b);
  for (auto [x, y] : edges) {
    s.add_edge(x, y);
    if (s.col[x] != s.col[y]) continue;
    int from = s.col[x], to = -1;
    for (int c = 0; c < k && to < 0; ++c)
      if (c != from && s.cnt[x][c] == 0) to = c;
    if (to < 0) throw std::logic_error("degree bound violated during insertion");
    s.set(x, to);
    if (!shift_along_path(s, to, from)) return exact();
  }
  std::vector<int> col(s.col.begin(), s.col.begin() + n);
  return {checked_equitable(g, Coloring{col, k}), EquitableMethod::kRecolouring};
}

std::optional<std::pair<Mask, Mask>> improper_partition(const Graph& g, int j, int k) {
  check_small(g, "improper_partition");
  const int n = g.order();
  if (j < 0 || k < 0) fail(ErrorCode::kInvalidArgument, "degree caps must be non-negative");
  std::vector<Mask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v);
  const int cap[2] = {j, k};
  auto result = [&](Mask side_k) -> std::pair<Mask, Mask> {
    Mask jj = g.all() & ~side_k;
    for (int v = 0; v < n; ++v) {
      Mask own = test(side_k, v) ? side_k : jj;
      if (popcount(adj[v] & own) > cap[test(side_k, v)]) throw std::logic_error("partition exceeds a degree cap");
    }
    return {jj, side_k};
  };

  // Local search on (k+1) e(J) + (j+1) e(K): when Delta <= j+k+1 every
  // violating vertex has an improving move, so this alone succeeds.
  Mask side_k = 0;
  while (true) {
    int mover = -1;
    bool violated = false;
    for (int v = 0; v < n && mover < 0; ++v) {
      int s = test(side_k, v);
      Mask own = s ? side_k : ~side_k;
      int d_own = popcount(adj[v] & own), d_other = popcount(adj[v]) - d_own;
      if (d_own <= cap[s]) continue;
      violated = true;
      long long w_own = s ? j + 1 : k + 1, w_other = s ? k + 1 : j + 1;
      if (w_other * d_other < w_own * d_own) mover = v;
    }
    if (!violated) return result(side_k);
    if (mover < 0) break;
    side_k ^= bit(mover);
  }

  Mask sides[2] = {0, 0};
  auto solve = [&](auto& self, int v) -> bool {
    if (v == n) return true;
    for (int s = 0; s < 2; ++s) {
      Mask nb = adj[v] & sides[s];
      if (popcount(nb) > cap[s]) continue;
      bool ok = true;
      for_each_bit(nb, [&](int u) { ok &= popcount(adj[u] & sides[s]) < cap[s]; });
      if (!ok) continue;
      sides[s] |= bit(v);
      if (self(self, v + 1)) return true;
      sides[s] &= ~bit(v);
    }
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  return result(sides[1]);
}

bool is_strongly_colourable(const Graph& g, int k) {
  if (k < 1) return g.order() == 0;
  const int n = g.order();
  const int total = (n + k - 1) / k * k;
  if (total > 64) fail(ErrorCode::kTooLarge, "padded graph exceeds 64 vertices");
  Graph h(total);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  if (!k_colouring(h, k)) return false;
  // Enumerate partitions into k-sets: the least unplaced vertex opens a block.
  Mask placed = 0;
  auto place = [&](auto& self) -> bool {
    if (placed == low_mask(total)) return k_colouring(h, k).has_value();
    int first = lowest_bit(~placed);
    std::vector<int> block;
    auto fill = [&](auto& fill_self, int from) -> bool {
      if (static_cast<int>(block.size()) == k) {
        std::vector<std::pair<int, int>> added;
        for (std::size_t a = 0; a < block.size(); ++a)
          for (std::size_t b = a + 1; b < block.size(); ++b)
            if (!h.has_edge(block[a], block[b])) {
              h.add_edge(block[a], block[b]);
              added.emplace_back(block[a], block[b]);
            }
        bool ok = self(self);
        for (auto [u, v] : added) h.remove_edge(u, v);
        return ok;
      }
      for (int v = from; v < total; ++v) {
        if (test(placed, v)) continue;
        placed |= bit(v);
        block.push_back(v);
        bool ok = fill_self(fill_self, v + 1);
        block.pop_back();
        placed &= ~bit(v);
        if (!ok) return false;
      }
      return true;
    };
    placed |= bit(first);
    block.push_back(first);
    bool ok = fill(fill, first + 1);
    block.pop_back();
    placed &= ~bit(first);
    return ok;
  };
  return place(place);
}

int strong_chromatic_number(const Graph& g) {
  if (g.order() > 8) fail(ErrorCode::kTooLarge, "strong chromatic number is exhaustive; n <= 8");
  for (int k = 1;; ++k)
    if (is_strongly_colourable(g, k)) return k;
}

bool is_k_critical(const Graph& g, int k) {
  check_small(g, "is_k_critical");
  if (k < 1 || !k_colouring(g, k) || k_colouring(g, k - 1)) return false;
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (!k_colouring(h, k - 1)) return false;
  }
  return true;
}

MonoCyclePartition min_mono_cycle_partition(const std::vector<std::vector<int>>& colour) {
  const int n = static_cast<int>(colour.size());
  if (n > 12) fail(ErrorCode::kTooLarge, "cycle partition DP needs n <= 12");
  int palette = 0;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(colour[u].size()) != n) fail(ErrorCode::kInvalidArgument, "colour matrix must be square");
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (colour[u][v] != colour[v][u] || colour[u][v] < 0)
        fail(ErrorCode::kInvalidArgument, "edge colours must be symmetric and non-negative");
      palette = std::max(palette, colour[u][v] + 1);
    }
  }
  const std::size_t subsets = std::size_t{1} << n;
  // cycle_colour[S]: a colour whose class has a cycle through exactly S (sets
  // of size <= 2 always qualify), or -2.
  std::vector<int> cycle_colour(subsets, -2);
  for (std::size_t s = 1; s < subsets; ++s)
    if (popcount(s) == 1) cycle_colour[s] = -1;
    else if (popcount(s) == 2) {
      int u = lowest_bit(s), v = lowest_bit(s & (s - 1));
      cycle_colour[s] = colour[u][v];
    }
  std::vector<std::vector<Mask>> reach(palette);
  std::vector<std::vector<Mask>> nbr(palette, std::vector<Mask>(n, 0));
  for (int c = 0; c < palette; ++c) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && colour[u][v] == c) nbr[c][u] |= bit(v);
    // reach[S]: ends of paths that start at min(S) and cover S in colour c.
    auto& r = reach[c];
    r.assign(subsets, 0);
    for (int v = 0; v < n; ++v) r[bit(v)] = bit(v);
    for (std::size_t s = 1; s < subsets; ++s) {
      if (!r[s]) continue;
      int low = lowest_bit(s);
      if (popcount(s) >= 3 && (r[s] & nbr[c][low]) && cycle_colour[s] == -2) cycle_colour[s] = c;
      for_each_bit(r[s], [&](int v) {
        Mask ext = nbr[c][v] & ~s & ~low_mask(low + 1) & low_mask(n);
        for_each_bit(ext, [&](int w) { r[s | bit(w)] |= bit(w); });
      });
    }
  }
  auto cycle_of = [&](Mask s) {
    std::vector<int> seq;
    int c = cycle_colour[s];
    if (popcount(s) <= 2) return bits_of(s);
    int low = lowest_bit(s);
    int end = lowest_bit(reach[c][s] & nbr[c][low]);
    Mask rest = s;
    while (true) {
      seq.push_back(end);
      rest &= ~bit(end);
      if (!rest) break;
      end = lowest_bit(reach[c][rest] & nbr[c][end]);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };

  std::vector<int> best(subsets, n + 1), choice(subsets, 0);
  best[0] = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    Mask low = s & (~s + 1), rest = s & ~low;
    for (Mask t = rest;; t = (t - 1) & rest) {
      Mask part = t | low;
      if (cycle_colour[part] != -2 && best[s & ~part] + 1 < best[s]) {
        best[s] = best[s & ~part] + 1;
        choice[s] = static_cast<int>(part);
      }
      if (t == 0) break;
    }
  }
  MonoCyclePartition out;
  out.count = best[subsets - 1];
  for (Mask s = subsets - 1; s; s &= ~static_cast<Mask>(choice[s])) {
    Mask part = static_cast<Mask>(choice[s]);
    out.cycles.push_back(cycle_of(part));
    out.colours.push_back(cycle_colour[part]);
  }
  return out;
}

}  // namespace iml::color
