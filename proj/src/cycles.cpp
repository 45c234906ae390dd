#include "iml/cycles/cycles.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "iml/core/bits.hpp"
#include "iml/core/error.hpp"
#include "iml/core/structure.hpp"
#include "iml/gen/generate.hpp"

namespace iml::cycles {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

void require_small(const Graph& g) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "cycle search works on graphs with at most 64 vertices");
}

void require_cubic(const Graph& g) {
  if (g.order() == 0 || g.min_degree() != 3 || g.max_degree() != 3) fail(ErrorCode::kNotCubic, "graph is not cubic");
}

// Hamilton paths from `start` to every vertex, counted over all vertex sets
// containing `start`. Returns counts for the full set, indexed by end vertex.
std::vector<u128> ham_path_counts(const Graph& g, int start) {
  int n = g.order();
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != start) others.push_back(v);
  int k = n - 1;
  std::vector<Mask> adj(k, 0);  // adjacency among `others`, in local indices
  Mask from_start = 0;
  for (int i = 0; i < k; ++i) {
    if (g.has_edge(start, others[i])) from_start |= bit(i);
    for (int j = 0; j < k; ++j)
      if (g.has_edge(others[i], others[j])) adj[i] |= bit(j);
  }
  size_t full = size_t{1} << k;
  std::vector<u128> dp(full * k, 0);
  for_each_bit(from_start, [&](int i) { dp[bit(i) * k + i] = 1; });
  for (size_t mask = 1; mask < full; ++mask) {
    for_each_bit(mask, [&](int v) {
      u128 ways = dp[mask * k + v];
      if (ways == 0) return;
      for_each_bit(adj[v] & ~mask, [&](int w) { dp[(mask | bit(w)) * k + w] += ways; });
    });
  }
  std::vector<u128> out(n, 0);
  for (int i = 0; i < k; ++i) out[others[i]] = dp[(full - 1) * k + i];
  return out;
}

// DFS over Hamilton cycles from vertex 0; each undirected cycle visited once.
template <typename F>
void for_each_ham_cycle(const Graph& g, F&& f) {
  int n = g.order();
  if (n < 3) return;
  std::vector<int> path{0};
  path.reserve(n);
  Mask all = low_mask(n);
  std::function<void(Mask)> go = [&](Mask used) {
    int v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(v, 0) && path[1] < v) f(path);
      return;
    }
    // Each unused vertex needs two cycle neighbours among the unused vertices,
    // the current end and vertex 0.
    Mask free_vs = all & ~used;
    bool stuck = false;
    for_each_bit(free_vs, [&](int w) {
      if (popcount(g.row(w) & (free_vs | bit(v) | 1)) < 2) stuck = true;
    });
    if (stuck) return;
    for_each_bit(g.row(v) & free_vs, [&](int w) {
      path.push_back(w);
      go(used | bit(w));
      path.pop_back();
    });
  };
  go(1);
}

std::vector<std::vector<int>> edge_index(const Graph& g) {
  std::vector<std::vector<int>> idx(g.order(), std::vector<int>(g.order(), -1));
  auto es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) idx[es[i].first][es[i].second] = idx[es[i].second][es[i].first] = static_cast<int>(i);
  return idx;
}

std::vector<int> cycle_edges(const std::vector<std::vector<int>>& idx, const std::vector<int>& cyc) {
  std::vector<int> out;
  for (size_t i = 0; i < cyc.size(); ++i) out.push_back(idx[cyc[i]][cyc[(i + 1) % cyc.size()]]);
  return out;
}

long long mod_inverse(long long a, long long p) {
  long long r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Incremental row echelon form over GF(p), p prime, or Q when p == 0.
class Eliminator {
 public:
  Eliminator(int columns, int p) : m_(columns), p_(p) {
    if (p != 0 && !is_prime(p)) fail(ErrorCode::kInvalidArgument, "field characteristic must be 0 or a prime");
  }

  // Adds a 0/1 vector given by its support; returns true if the rank grew.
  bool add(const std::vector<int>& support) {
    if (p_ == 2 && m_ <= 64) return add_gf2(support);
    if (p_ == 0) return add_rational(support);
    return add_modular(support);
  }

  int rank() const { return rank_; }

 private:
  bool add_gf2(const std::vector<int>& support) {
    Mask row = 0;
    for (int e : support) row ^= bit(e);
    for (auto& [pivot, b] : gf2_)
      if (test(row, pivot)) row ^= b;
    if (row == 0) return false;
    gf2_.emplace(lowest_bit(row), row);
    ++rank_;
    return true;
  }

  bool add_modular(const std::vector<int>& support) {
    std::vector<long long> row(m_, 0);
    for (int e : support) row[e] = (row[e] + 1) % p_;
    for (auto& [pivot, b] : mod_) {
      long long c = row[pivot];
      if (c == 0) continue;
      for (int j = pivot; j < m_; ++j) row[j] = ((row[j] - c * b[j]) % p_ + p_) % p_;
    }
    auto it = std::find_if(row.begin(), row.end(), [](long long x) { return x != 0; });
    if (it == row.end()) return false;
    int pivot = static_cast<int>(it - row.begin());
    long long inv = mod_inverse(row[pivot], p_);
    for (auto& x : row) x = x * inv % p_;
    mod_.emplace(pivot, std::move(row));
    ++rank_;
    return true;
  }

  bool add_rational(const std::vector<int>& support) {
    std::vector<Rational> row(m_, Rational(0));
    for (int e : support) row[e] += 1;
    for (auto& [pivot, b] : rat_) {
      Rational c = row[pivot];
      if (c == 0) continue;
      for (int j = pivot; j < m_; ++j)
        if (b[j] != 0) row[j] -= c * b[j];
    }
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (it == row.end()) return false;
    int pivot = static_cast<int>(it - row.begin());
    Rational lead = row[pivot];
    for (auto& x : row) x /= lead;
    rat_.emplace(pivot, std::move(row));
    ++rank_;
    return true;
  }

  int m_;
  int p_;
  int rank_ = 0;
  std::map<int, Mask> gf2_;
  std::map<int, std::vector<long long>> mod_;
  std::map<int, std::vector<Rational>> rat_;
};

// Lexicographically least shortest cycle through edge uv (u < v): u, v, ..., back to u.
std::vector<int> shortest_cycle_through(const Graph& g, int u, int v) {
  int n = g.order();
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
  }
  std::vector<int> cyc{u, v};
  int cur = v;
  while (dist[cur] > 1) {
    int next = -1;
    for (int b : g.neighbors(cur))
      if (!(cur == v && b == u) && dist[b] == dist[cur] - 1) {
        next = b;
        break;
      }
    cyc.push_back(next);
    cur = next;
  }
  return cyc;
}

}  // namespace

void for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& f, int max_length) {
  require_small(g);
  int n = g.order();
  std::vector<int> path;
  bool stop = false;
  for (int s = 0; s < n && !stop; ++s) {
    Mask allowed = ~low_mask(s + 1) & low_mask(n);
    path.assign(1, s);
    std::function<void(Mask)> go = [&](Mask used) {
      int v = path.back();
      if (path.size() >= 3 && g.has_edge(v, s) && path[1] < v) {
        if (!f(path)) {
          stop = true;
          return;
        }
      }
      if (static_cast<int>(path.size()) >= max_length) return;
      for_each_bit(g.row(v) & allowed & ~used, [&](int w) {
        if (stop) return;
        path.push_back(w);
        go(used | bit(w));
        path.pop_back();
      });
    };
    go(bit(s));
  }
}

CycleCount count_cycles_of_length(const Graph& g, int length) {
  require_small(g);
  CycleCount out{length, 0};
  int n = g.order();
  if (length < 3 || length > n) return out;
  long long total = 0;
  for (int s = 0; s < n; ++s) {
    Mask allowed = ~low_mask(s + 1) & low_mask(n);
    std::function<void(int, int, int, Mask)> go = [&](int first, int v, int len, Mask used) {
      if (len == length) {
        if (g.has_edge(v, s) && first < v) ++total;
        return;
      }
      for_each_bit(g.row(v) & allowed & ~used, [&](int w) { go(len == 1 ? w : first, w, len + 1, used | bit(w)); });
    };
    go(-1, s, 1, bit(s));
  }
  out.count = total;
  return out;
}

HalfCycleMaximum max_half_cycles(int n) {
  HalfCycleMaximum best;
  best.n = n;
  for (const Graph& g : gen::connected_cubic_graphs(n)) {
    BigInt c = count_cycles_of_length(g, n / 2).count;
    if (c > best.max_count || best.witnesses.empty()) {
      best.max_count = c;
      best.witnesses.clear();
    }
    if (c == best.max_count) best.witnesses.push_back(g);
  }
  return best;
}

HamCensus ham_census(const Graph& g) {
  require_small(g);
  HamCensus out;
  out.edges = g.edges();
  out.per_edge.assign(out.edges.size(), 0);
  auto idx = edge_index(g);
  std::vector<long long> per(out.edges.size(), 0);
  long long total = 0;
  for_each_ham_cycle(g, [&](const std::vector<int>& cyc) {
    ++total;
    for (int e : cycle_edges(idx, cyc)) ++per[e];
  });
  out.total = total;
  for (size_t i = 0; i < per.size(); ++i) out.per_edge[i] = per[i];
  return out;
}

BigInt count_ham_cycles(const Graph& g, HamMethod method) {
  int n = g.order();
  if (n < 3) return 0;
  if (method == HamMethod::kAuto) method = n <= kMaxDpOrder ? HamMethod::kSubsetDp : HamMethod::kSearch;
  if (method == HamMethod::kSubsetDp) {
    if (n > kMaxDpOrder) fail(ErrorCode::kTooLarge, "subset DP limited to small graphs");
    auto paths = ham_path_counts(g, 0);
    u128 sum = 0;
    for (int w : g.neighbors(0)) sum += paths[w];
    return to_big(sum / 2);
  }
  require_small(g);
  long long total = 0;
  for_each_ham_cycle(g, [&](const std::vector<int>&) { ++total; });
  return total;
}

BigInt count_ham_through_edge(const Graph& g, int u, int v, HamMethod method) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
    fail(ErrorCode::kEdgeAbsent, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
  int n = g.order();
  if (n < 3) return 0;
  if (method == HamMethod::kAuto) method = n <= kMaxDpOrder ? HamMethod::kSubsetDp : HamMethod::kSearch;
  if (method == HamMethod::kSubsetDp) {
    if (n > kMaxDpOrder) fail(ErrorCode::kTooLarge, "subset DP limited to small graphs");
    return to_big(ham_path_counts(g, u)[v]);
  }
  auto census = ham_census(g);
  auto it = std::find(census.edges.begin(), census.edges.end(), Edge{std::min(u, v), std::max(u, v)});
  return census.per_edge[it - census.edges.begin()];
}

SmithReport smith_parity_check(const Graph& g) {
  require_cubic(g);
  auto census = ham_census(g);
  SmithReport out;
  out.edges = census.edges;
  out.counts = census.per_edge;
  for (size_t i = 0; i < out.edges.size(); ++i)
    if (out.counts[i] % 2 != 0) out.odd_edges.push_back(out.edges[i]);
  return out;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
  int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

LollipopTrace lollipop_walk(const Graph& g, const std::vector<int>& cycle, Edge e) {
  require_cubic(g);
  if (!is_hamiltonian_cycle(g, cycle)) fail(ErrorCode::kNotHamiltonianCycle, "input is not a Hamilton cycle");
  int n = g.order();
  auto [x, y] = e;
  auto it = std::find(cycle.begin(), cycle.end(), x);
  if (it == cycle.end()) fail(ErrorCode::kNotHamiltonianCycle, "edge endpoint not on cycle");
  int i = static_cast<int>(it - cycle.begin());
  std::vector<int> path(n);
  if (cycle[(i + 1) % n] == y) {
    for (int k = 0; k < n; ++k) path[k] = cycle[(i + k) % n];
  } else if (cycle[(i + n - 1) % n] == y) {
    for (int k = 0; k < n; ++k) path[k] = cycle[(i - k + n) % n];
  } else {
    fail(ErrorCode::kNotHamiltonianCycle, "edge is not on the cycle");
  }

  LollipopTrace trace;
  trace.start_cycle = path;
  trace.start_edge = e;
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[path[k]] = k;
  int forbidden = x;  // closing back to x through this edge returns the start cycle
  while (true) {
    int end = path[n - 1];
    int pred = path[n - 2];
    int w = -1;
    for (int c : g.neighbors(end))
      if (c != pred && c != forbidden) {
        w = c;
        break;
      }
    if (w == x) break;
    int j = pos[w];
    std::reverse(path.begin() + j + 1, path.end());
    for (int k = j + 1; k < n; ++k) pos[path[k]] = k;
    forbidden = w;
    ++trace.steps;
  }
  trace.end_cycle = path;
  return trace;
}

int cycle_space_dimension(const Graph& g, int p) {
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "cycle space dimension needs a connected graph");
  auto idx = edge_index(g);
  int m = g.size();
  Eliminator elim(m, p);
  if (m == 0) return 0;
  for_each_cycle(g, [&](const std::vector<int>& cyc) {
    elim.add(cycle_edges(idx, cyc));
    return elim.rank() < m;
  });
  return elim.rank();
}

CycleBasisAttempt explicit_cycle_basis(const Graph& g, int p) {
  if (p == 2) fail(ErrorCode::kInvalidArgument, "an edge-indexed basis needs characteristic other than 2");
  if (g.order() < 2 || edge_connectivity(g) < 3) fail(ErrorCode::kNotThreeEdgeConnected, "graph is not 3-edge-connected");
  auto idx = edge_index(g);
  Eliminator elim(g.size(), p);
  CycleBasisAttempt out;
  for (auto [u, v] : g.edges()) {
    out.cycles.push_back(shortest_cycle_through(g, u, v));
    elim.add(cycle_edges(idx, out.cycles.back()));
  }
  out.rank = elim.rank();
  out.independent = out.rank == g.size();
  return out;
}

namespace {

struct PathTable {
  int n = 0;
  int x = 0, y = 0;
  std::vector<std::uint32_t> ends;  // per vertex set: possible last vertices of x-paths
};

PathTable path_table(const Digraph& d, int x, int y) {
  int n = d.order();
  if (n > 24) fail(ErrorCode::kTooLarge, "(x,y)-path search is limited to 24 vertices");
  if (x == y || x < 0 || y < 0 || x >= n || y >= n) fail(ErrorCode::kInvalidArgument, "x and y must be distinct vertices");
  PathTable t{n, x, y, std::vector<std::uint32_t>(size_t{1} << n, 0)};
  t.ends[bit(x)] = static_cast<std::uint32_t>(bit(x));
  for (size_t mask = 1; mask < t.ends.size(); ++mask) {
    std::uint32_t ends = t.ends[mask];
    if (ends == 0) continue;
    for_each_bit(ends, [&](int v) {
      if (v == y) return;
      for_each_bit(d.out(v) & ~static_cast<Mask>(mask), [&](int w) { t.ends[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
    });
  }
  return t;
}

std::vector<int> trace_back(const Digraph& d, const PathTable& t, Mask mask) {
  std::vector<int> rev{t.y};
  int v = t.y;
  while (mask != bit(t.x)) {
    Mask rest = mask & ~bit(v);
    int u = -1;
    for_each_bit(t.ends[rest], [&](int c) {
      if (u < 0 && c != t.y && d.has_arc(c, v)) u = c;
    });
    rev.push_back(u);
    v = u;
    mask = rest;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

std::optional<std::vector<int>> ham_path_xy(const Digraph& d, int x, int y) {
  auto t = path_table(d, x, y);
  Mask full = low_mask(t.n);
  if (!test(t.ends[full], y)) return std::nullopt;
  return trace_back(d, t, full);
}

LongestPath longest_xy_path(const Digraph& d, int x, int y) {
  auto t = path_table(d, x, y);
  LongestPath best;
  Mask best_mask = 0;
  for (size_t mask = 0; mask < t.ends.size(); ++mask)
    if (test(t.ends[mask], y) && popcount(mask) - 1 > best.length) {
      best.length = popcount(mask) - 1;
      best_mask = mask;
    }
  if (best_mask != 0) best.path = trace_back(d, t, best_mask);
  return best;
}

}  // namespace iml::cycles
