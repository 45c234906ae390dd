#include "iml/tournaments/tournaments.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "iml/core/bits.hpp"
#include "iml/core/error.hpp"
#include "iml/core/flow.hpp"
#include "iml/core/structure.hpp"

namespace iml::tour {

namespace {

// Number of arc-disjoint s->t paths, stopping once `cap` are found.
int arc_paths(const std::vector<Mask>& out, int n, int s, int t, int cap) {
  std::vector<std::vector<int>> res(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) for_each_bit(out[u], [&](int v) { res[u][v] = 1; });
  int found = 0;
  std::vector<int> parent(n);
  while (found < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (size_t i = 0; i < queue.size() && parent[t] < 0; ++i) {
      int u = queue[i];
      for (int v = 0; v < n; ++v)
        if (res[u][v] > 0 && parent[v] < 0) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[t] < 0) break;
    for (int v = t; v != s; v = parent[v]) {
      --res[parent[v]][v];
      ++res[v][parent[v]];
    }
    ++found;
  }
  return found;
}

std::vector<Mask> out_rows(const Digraph& d) {
  std::vector<Mask> rows(d.order());
  for (int v = 0; v < d.order(); ++v) rows[v] = d.out(v);
  return rows;
}

bool rows_k_arc_strong(const std::vector<Mask>& out, int n, int k) {
  if (k <= 0) return true;
  if (n <= 1) return true;
  if (k == 1) return strongly_connected(out, low_mask(n));
  for (int v = 1; v < n; ++v) {
    if (arc_paths(out, n, 0, v, k) < k) return false;
    if (arc_paths(out, n, v, 0, k) < k) return false;
  }
  return true;
}

int local_vertex_paths(const Digraph& d, int s, int t) {
  int n = d.order();
  FlowNetwork net(2 * n);  // v_in = v, v_out = n + v
  for (int v = 0; v < n; ++v) net.add_arc(v, n + v, (v == s || v == t) ? FlowNetwork::kInfinity : 1);
  for (auto [u, v] : d.arcs()) net.add_arc(n + u, v, 1);
  return static_cast<int>(net.max_flow(n + s, t));
}

void require_order(const Digraph& t, int k) {
  if (t.order() < 2 * k + 1) fail(ErrorCode::kTooSmall, "needs at least 2k+1 vertices");
}

}  // namespace

int arc_strong_connectivity(const Digraph& d) {
  int n = d.order();
  if (n <= 1) return 0;
  auto out = out_rows(d);
  int best = n;
  for (int v = 1; v < n; ++v) {
    best = std::min(best, arc_paths(out, n, 0, v, best));
    best = std::min(best, arc_paths(out, n, v, 0, best));
  }
  return best;
}

int vertex_strong_connectivity(const Digraph& d) {
  int n = d.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !d.has_arc(u, v)) best = std::min(best, local_vertex_paths(d, u, v));
  return best;
}

bool is_k_arc_strong(const Digraph& d, int k) { return rows_k_arc_strong(out_rows(d), d.order(), k); }

bool is_k_strong(const Digraph& d, int k) {
  if (d.order() < k + 1) return false;
  if (k <= 0) return true;
  if (k == 1) return strongly_connected(d);
  return vertex_strong_connectivity(d) >= k;
}

std::optional<StrongDecomposition> decompose_arc_disjoint_strong(const Digraph& d, int k) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");
  int n = d.order();
  auto arcs = d.arcs();
  int m = static_cast<int>(arcs.size());
  Mask all = d.all();
  if (n == 1) return StrongDecomposition{k, std::vector<std::vector<Arc>>(k)};
  if (m < k * n) return std::nullopt;
  // possible[c]: arcs assigned to class c or not yet assigned.
  std::vector<std::vector<Mask>> possible(k, out_rows(d));
  for (int c = 0; c < k; ++c)
    if (!strongly_connected(possible[c], all)) return std::nullopt;
  std::vector<int> cls(m, -1);
  std::function<bool(int, int)> go = [&](int i, int used) -> bool {
    if (i == m) return true;
    auto [u, v] = arcs[i];
    int top = std::min(k - 1, used);
    for (int c = 0; c <= top; ++c) {
      bool ok = true;
      for (int o = 0; o < k; ++o)
        if (o != c) possible[o][u] &= ~bit(v);
      for (int o = 0; o < k && ok; ++o)
        if (o != c) ok = strongly_connected(possible[o], all);
      if (ok) {
        cls[i] = c;
        if (go(i + 1, std::max(used, c + 1))) return true;
      }
      for (int o = 0; o < k; ++o) possible[o][u] |= bit(v);
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  StrongDecomposition dec{k, std::vector<std::vector<Arc>>(k)};
  for (int i = 0; i < m; ++i) dec.classes[cls[i]].push_back(arcs[i]);
  return dec;
}

bool verify_decomposition(const Digraph& d, const StrongDecomposition& dec) {
  int n = d.order();
  std::vector<Arc> seen;
  for (const auto& cls : dec.classes) {
    Digraph part(n);
    for (auto [u, v] : cls) {
      if (!d.has_arc(u, v) || part.has_arc(u, v)) return false;
      part.add_arc(u, v);
      seen.push_back({u, v});
    }
    if (n > 1 && !strongly_connected(part)) return false;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end() && seen == d.arcs();
}

std::optional<std::vector<std::vector<int>>> kelly_decomposition(const Digraph& t) {
  if (!t.is_regular_tournament()) fail(ErrorCode::kNotRegular, "Kelly decomposition needs a regular tournament");
  int n = t.order();
  if (n == 1) return std::vector<std::vector<int>>{};
  auto rows = out_rows(t);
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  // Every decomposition has a cycle through 0's lowest remaining out-arc.
  std::function<bool()> solve = [&]() -> bool {
    if (rows[0] == 0) return true;
    int first = lowest_bit(rows[0]);
    path.assign({0, first});
    std::function<bool(Mask)> extend = [&](Mask used) -> bool {
      int v = path.back();
      if (static_cast<int>(path.size()) == n) {
        if (!test(rows[v], 0)) return false;
        std::vector<int> cyc = path;
        for (int i = 0; i < n; ++i) rows[cyc[i]] &= ~bit(cyc[(i + 1) % n]);
        cycles.push_back(cyc);
        if (solve()) return true;
        cycles.pop_back();
        for (int i = 0; i < n; ++i) rows[cyc[i]] |= bit(cyc[(i + 1) % n]);
        path = cyc;
        return false;
      }
      bool done = false;
      for_each_bit(rows[v] & ~used, [&](int w) {
        if (done) return;
        path.push_back(w);
        done = extend(used | bit(w));
        if (!done) path.pop_back();
      });
      return done;
    };
    return extend(bit(0) | bit(first));
  };
  if (!solve()) return std::nullopt;
  return cycles;
}

bool verify_kelly(const Digraph& t, const std::vector<std::vector<int>>& cycles) {
  int n = t.order();
  Digraph covered(n);
  for (const auto& c : cycles) {
    if (static_cast<int>(c.size()) != n) return false;
    Mask seen = 0;
    for (int v : c) seen |= bit(v);
    if (seen != t.all()) return false;
    for (int i = 0; i < n; ++i) {
      int u = c[i], v = c[(i + 1) % n];
      if (!t.has_arc(u, v) || covered.has_arc(u, v)) return false;
      covered.add_arc(u, v);
    }
  }
  return covered == t;
}

std::optional<std::vector<std::vector<int>>> disjoint_cycles(const Digraph& d, int k) {
  if (k <= 0) return std::vector<std::vector<int>>{};
  std::unordered_set<std::uint64_t> dead;  // (k, available) pairs known to fail
  std::vector<std::vector<int>> chosen;
  std::function<bool(int, Mask)> find = [&](int need, Mask avail) -> bool {
    if (need == 0) return true;
    if (popcount(avail) < 2 * need) return false;
    std::uint64_t key = avail * 64 + static_cast<std::uint64_t>(need);
    if (d.order() <= 57 && dead.count(key)) return false;
    int v = lowest_bit(avail);
    // Chordless cycles through v suffice: any cycle contains one on a subset
    // of its vertices, and the branch dropping v covers the rest.
    std::vector<int> path{v};
    std::function<bool(Mask)> grow = [&](Mask used) -> bool {
      int last = path.back();
      bool done = false;
      for_each_bit(d.out(last) & avail & ~used, [&](int w) {
        if (done) return;
        int j = static_cast<int>(path.size());
        for (int i = 0; i + 1 < j; ++i)
          if (d.has_arc(path[i], w)) return;
        for (int i = 1; i < j; ++i)
          if (d.has_arc(w, path[i])) return;
        path.push_back(w);
        if (d.has_arc(w, v)) {
          chosen.push_back(path);
          done = find(need - 1, avail & ~(used | bit(w)));
          if (!done) chosen.pop_back();
        } else {
          done = grow(used | bit(w));
        }
        path.pop_back();
      });
      return done;
    };
    if (grow(bit(v))) return true;
    if (find(need, avail & ~bit(v))) return true;
    if (d.order() <= 57) dead.insert(key);
    return false;
  };
  if (!find(k, d.all())) return std::nullopt;
  return chosen;
}

std::optional<SpanningWitness> alpha_k(const Digraph& t, int k) {
  require_order(t, k);
  int n = t.order();
  for (int v = 0; v < n; ++v)
    if (t.out_degree(v) < k || t.in_degree(v) < k) return std::nullopt;
  // Arcs left out form a subdigraph with out(v) <= d+(v)-k and in(v) <= d-(v)-k;
  // the largest such set is a max-flow.
  FlowNetwork net(2 * n + 2);
  int s = 2 * n, sink = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    net.add_arc(s, v, t.out_degree(v) - k);
    net.add_arc(n + v, sink, t.in_degree(v) - k);
  }
  auto arcs = t.arcs();
  std::vector<int> ids;
  for (auto [u, v] : arcs) ids.push_back(net.add_arc(u, n + v, 1));
  auto dropped = net.max_flow(s, sink);
  SpanningWitness w{static_cast<int>(arcs.size() - dropped), Digraph(n)};
  for (size_t i = 0; i < arcs.size(); ++i)
    if (net.flow_on(ids[i]) == 0) w.subdigraph.add_arc(arcs[i].first, arcs[i].second);
  return w;
}

SpanningWitness beta_k(const Digraph& t, int k) {
  if (!is_k_arc_strong(t, k)) fail(ErrorCode::kNotKArcStrong, "input is not k-arc-strong");
  int n = t.order();
  auto arcs = t.arcs();
  int m = static_cast<int>(arcs.size());
  int lower = k * n;
  if (n >= 2 * k + 1) lower = std::max(lower, alpha_k(t, k)->arcs);
  auto rows = out_rows(t);
  std::vector<int> outd(n), ind(n);
  for (int v = 0; v < n; ++v) {
    outd[v] = t.out_degree(v);
    ind[v] = t.in_degree(v);
  }
  for (int target = lower; target <= m; ++target) {
    int drop = m - target;
    std::function<bool(int, int)> go = [&](int i, int left) -> bool {
      if (left == 0) return true;
      if (m - i < left) return false;
      auto [u, v] = arcs[i];
      if (outd[u] > k && ind[v] > k) {
        rows[u] &= ~bit(v);
        if (rows_k_arc_strong(rows, n, k)) {
          --outd[u];
          --ind[v];
          bool ok = go(i + 1, left - 1);
          ++outd[u];
          ++ind[v];
          if (ok) return true;
        }
        rows[u] |= bit(v);
      }
      return go(i + 1, left);
    };
    if (go(0, drop)) {
      SpanningWitness w{target, Digraph(n)};
      for (int u = 0; u < n; ++u) for_each_bit(rows[u], [&](int v) { w.subdigraph.add_arc(u, v); });
      return w;
    }
  }
  fail(ErrorCode::kNotKArcStrong, "no k-arc-strong spanning subdigraph");
}

namespace {

int degree_deficit(const Digraph& d, int k) {
  int out_def = 0, in_def = 0;
  for (int v = 0; v < d.order(); ++v) {
    out_def += std::max(0, k - d.out_degree(v));
    in_def += std::max(0, k - d.in_degree(v));
  }
  return std::max(out_def, in_def);
}

ReversalResult min_reversals(const Digraph& t, int k, bool arc_strong) {
  require_order(t, k);
  auto arcs = t.arcs();
  int m = static_cast<int>(arcs.size());
  auto goal = [&](const Digraph& d) {
    if (arc_strong) return is_k_arc_strong(d, k);
    return d.min_out_degree() >= k && d.min_in_degree() >= k;
  };
  Digraph cur = t;
  std::vector<Arc> chosen;
  std::function<bool(int, int)> go = [&](int i, int budget) -> bool {
    if (degree_deficit(cur, k) > budget) return false;
    if (budget == 0) return goal(cur);
    if (goal(cur)) return true;
    for (int j = i; j < m; ++j) {
      auto [u, v] = arcs[j];
      cur.reverse_arc(u, v);
      chosen.push_back(arcs[j]);
      if (go(j + 1, budget - 1)) return true;
      chosen.pop_back();
      cur.reverse_arc(v, u);
    }
    return false;
  };
  for (int budget = degree_deficit(t, k); budget <= m; ++budget) {
    chosen.clear();
    if (go(0, budget)) return {chosen, cur, true};
  }
  return {{}, t, false};
}

}  // namespace

ReversalResult reversal_deg(const Digraph& t, int k) { return min_reversals(t, k, false); }
ReversalResult reversal_arc_strong(const Digraph& t, int k) { return min_reversals(t, k, true); }

namespace {

// ends[mask]: vertices v such that some path from `x` covers exactly mask and ends at v.
std::vector<Mask> paths_from(const Digraph& d, int x) {
  int n = d.order();
  std::vector<Mask> ends(size_t{1} << n, 0);
  ends[bit(x)] = bit(x);
  for (size_t mask = 1; mask < ends.size(); ++mask)
    for_each_bit(ends[mask], [&](int v) {
      for_each_bit(d.out(v) & ~static_cast<Mask>(mask), [&](int w) { ends[mask | bit(w)] |= bit(w); });
    });
  return ends;
}

}  // namespace

bool is_path_mergeable(const Digraph& d) {
  int n = d.order();
  if (n > 12) fail(ErrorCode::kTooLarge, "path-mergeable check is limited to 12 vertices");
  Mask all = d.all();
  for (int x = 0; x < n; ++x) {
    auto ends = paths_from(d, x);
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      Mask tips = bit(x) | bit(y);
      for (Mask m1 = 0; m1 <= all; ++m1) {
        if ((m1 & tips) != tips || !test(ends[m1], y)) continue;
        // Second path: nonempty interior drawn from the vertices outside m1.
        Mask rest = all & ~m1;
        for (Mask sub = rest; sub != 0; sub = (sub - 1) & rest)
          if (test(ends[sub | tips], y) && !test(ends[m1 | sub], y)) return false;
      }
    }
  }
  return true;
}

bool has_cutvertex(const Digraph& d) {
  int n = d.order();
  if (n < 3) return false;
  Graph g = d.underlying();
  if (!is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (!is_connected(g.induced(g.all() & ~bit(v)))) return true;
  return false;
}

std::optional<std::vector<int>> hamiltonian_path(const Digraph& d) {
  int n = d.order();
  if (n == 0) return std::nullopt;
  if (n > 24) fail(ErrorCode::kTooLarge, "Hamilton path search is limited to 24 vertices");
  std::vector<Mask> ends(size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[bit(v)] = bit(v);
  for (size_t mask = 1; mask < ends.size(); ++mask)
    for_each_bit(ends[mask], [&](int v) {
      for_each_bit(d.out(v) & ~static_cast<Mask>(mask), [&](int w) { ends[mask | bit(w)] |= bit(w); });
    });
  Mask mask = d.all();
  if (ends[mask] == 0) return std::nullopt;
  std::vector<int> rev{lowest_bit(ends[mask])};
  while (popcount(mask) > 1) {
    int v = rev.back();
    Mask rest = mask & ~bit(v);
    Mask preds = ends[rest] & d.in(v);
    rev.push_back(lowest_bit(preds));
    mask = rest;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<std::vector<int>> hamiltonian_cycle(const Digraph& d) {
  int n = d.order();
  if (n < 2) return std::nullopt;
  if (n > 24) fail(ErrorCode::kTooLarge, "Hamilton cycle search is limited to 24 vertices");
  auto ends = paths_from(d, 0);
  Mask mask = d.all();
  Mask closing = ends[mask] & d.in(0);
  if (closing == 0) return std::nullopt;
  std::vector<int> rev{lowest_bit(closing)};
  while (popcount(mask) > 1) {
    int v = rev.back();
    Mask rest = mask & ~bit(v);
    rev.push_back(lowest_bit(ends[rest] & d.in(v)));
    mask = rest;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> two_arc_disjoint_hamilton_cycles(const Digraph& d) {
  const int n = d.order();
  if (n > 10) fail(ErrorCode::kTooLarge, "two Hamilton cycles search is limited to 10 vertices");
  if (n < 3) return std::nullopt;
  std::vector<int> path{0};
  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  auto extend = [&](auto&& self, Mask used) -> void {
    if (found) return;
    int v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (!d.has_arc(v, 0)) return;
      Digraph rest = d;
      for (int i = 0; i < n; ++i) rest.remove_arc(path[i], path[(i + 1) % n]);
      if (auto second = hamiltonian_cycle(rest)) found.emplace(path, *second);
      return;
    }
    for_each_bit(d.out(v) & ~used, [&](int w) {
      if (found) return;
      path.push_back(w);
      self(self, used | bit(w));
      path.pop_back();
    });
  };
  extend(extend, bit(0));
  return found;
}

PmHamPath pm_ham_path(const Digraph& d) {
  PmHamPath out;
  out.path = hamiltonian_path(d);
  for (Mask c : strong_components(d)) out.strong_components.push_back(bits_of(c));
  return out;
}

std::optional<std::vector<std::vector<int>>> partition_into_k_strong(const Digraph& t, int parts, int k,
                                                                     const std::vector<int>& roots) {
  if (parts < 1) fail(ErrorCode::kInvalidArgument, "need at least one part");
  int n = t.order();
  if (!roots.empty() && static_cast<int>(roots.size()) != parts)
    fail(ErrorCode::kInvalidArgument, "one root per part");
  std::vector<int> part(n, -1);
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
    int r = roots[i];
    if (r < 0 || r >= n || part[r] >= 0) fail(ErrorCode::kInvalidArgument, "roots must be distinct vertices");
    part[r] = i;
  }
  std::vector<Mask> sets(parts, 0);
  for (int v = 0; v < n; ++v)
    if (part[v] >= 0) sets[part[v]] |= bit(v);
  // Without roots the parts are interchangeable: open them in order.
  std::function<bool(int, int)> go = [&](int v, int opened) -> bool {
    if (v == n) {
      for (Mask s : sets)
        if (!is_k_strong(t.induced(s), k)) return false;
      return true;
    }
    if (part[v] >= 0) return go(v + 1, opened);
    int top = roots.empty() ? std::min(parts - 1, opened) : parts - 1;
    for (int p = 0; p <= top; ++p) {
      sets[p] |= bit(v);
      if (go(v + 1, roots.empty() ? std::max(opened, p + 1) : opened)) return true;
      sets[p] &= ~bit(v);
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  std::vector<std::vector<int>> out;
  for (Mask s : sets) out.push_back(bits_of(s));
  return out;
}

namespace {

// Cover `avail` by vertex-disjoint cycles (length >= 3) of g.
bool cycle_cover(const Graph& g, Mask avail, std::vector<std::vector<int>>& cycles,
                 std::unordered_set<Mask>& dead) {
  if (avail == 0) return true;
  if (dead.count(avail)) return false;
  int v = lowest_bit(avail);
  std::vector<int> path{v};
  std::function<bool(Mask)> grow = [&](Mask used) -> bool {
    int last = path.back();
    bool done = false;
    for_each_bit(g.row(last) & avail & ~used, [&](int w) {
      if (done) return;
      path.push_back(w);
      if (path.size() >= 3 && g.has_edge(w, v) && path[1] < w) {
        cycles.push_back(path);
        done = cycle_cover(g, avail & ~(used | bit(w)), cycles, dead);
        if (!done) cycles.pop_back();
      }
      if (!done) done = grow(used | bit(w));
      path.pop_back();
    });
    return done;
  };
  if (grow(bit(v))) return true;
  dead.insert(avail);
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> two_factor_one_directed(const Digraph& d) {
  int n = d.order();
  Graph g = d.underlying();
  std::unordered_set<Mask> dead;
  std::vector<std::vector<int>> result;
  for (int s = 0; s < n; ++s) {
    Mask allowed = d.all() & ~low_mask(s + 1);
    std::vector<int> path{s};
    std::function<bool(Mask)> grow = [&](Mask used) -> bool {
      int last = path.back();
      bool done = false;
      for_each_bit(d.out(last) & allowed & ~used, [&](int w) {
        if (done) return;
        path.push_back(w);
        if (path.size() >= 3 && d.has_arc(w, s)) {
          std::vector<std::vector<int>> rest;
          if (cycle_cover(g, d.all() & ~(used | bit(w)), rest, dead)) {
            result.push_back(path);
            for (auto& c : rest) result.push_back(c);
            done = true;
          }
        }
        if (!done) done = grow(used | bit(w));
        path.pop_back();
      });
      return done;
    };
    if (grow(bit(s))) return result;
  }
  return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> colored_two_matchings(const ColouredBipartite& b) {
  if (b.left != b.right) return std::nullopt;
  int n = b.left;
  for (const auto& e : b.edges)
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || (e.colour != 1 && e.colour != 2))
      fail(ErrorCode::kInvalidArgument, "bad coloured bipartite edge");
  std::vector<int> m1;
  std::vector<bool> right_used(n, false), in_m1(b.edges.size(), false);
  std::optional<std::pair<std::vector<int>, std::vector<int>>> answer;
  auto complete_second = [&]() -> bool {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (size_t i = 0; i < b.edges.size(); ++i)
      if (!in_m1[i]) adj[b.edges[i].u].push_back({b.edges[i].v, static_cast<int>(i)});
    std::vector<int> match_right(n, -1);
    // match_right stores edge ids; recover left endpoints through the edge list.
    std::vector<int> owner(n, -1);
    for (int u = 0; u < n; ++u) {
      std::vector<bool> seen(n, false);
      std::function<bool(int)> augment = [&](int x) -> bool {
        for (auto [v, id] : adj[x]) {
          if (seen[v]) continue;
          seen[v] = true;
          if (owner[v] < 0 || augment(owner[v])) {
            owner[v] = x;
            match_right[v] = id;
            return true;
          }
        }
        return false;
      };
      if (!augment(u)) return false;
    }
    std::vector<int> m2(match_right.begin(), match_right.end());
    std::sort(m2.begin(), m2.end());
    answer = {m1, m2};
    return true;
  };
  std::function<bool(int)> go = [&](int u) -> bool {
    if (u == n) return complete_second();
    for (size_t i = 0; i < b.edges.size(); ++i) {
      const auto& e = b.edges[i];
      if (e.u != u || e.colour != 1 || right_used[e.v]) continue;
      right_used[e.v] = true;
      in_m1[i] = true;
      m1.push_back(static_cast<int>(i));
      if (go(u + 1)) return true;
      m1.pop_back();
      in_m1[i] = false;
      right_used[e.v] = false;
    }
    return false;
  };
  go(0);
  return answer;
}

}  // namespace iml::tour
