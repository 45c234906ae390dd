#include "iml/designs/designs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/extremal/extremal.hpp"

namespace iml::des {

// ---- Matroids ----------------------------------------------------------------

int Matroid::rank() const {
  Mask basis = 0;
  for (int e = 0; e < size; ++e)
    if (independent(basis | bit(e))) basis |= bit(e);
  return popcount(basis);
}

Matroid graphic_matroid(int n, const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() > 64) fail(ErrorCode::kTooLarge, "at most 64 matroid elements");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  Matroid m;
  m.size = static_cast<int>(edges.size());
  m.independent = [n, edges](Mask s) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    for_each_bit(s, [&](int e) {
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) forest = false;
      else parent[a] = b;
    });
    return forest;
  };
  return m;
}

bool windows_are_bases(const Matroid& m, const std::vector<int>& order) {
  const int r = m.rank(), len = static_cast<int>(order.size());
  if (len < r) return false;
  for (int s = 0; s < len; ++s) {
    Mask w = 0;
    for (int i = 0; i < r; ++i) w |= bit(order[(s + i) % len]);
    if (popcount(w) != r || !m.independent(w)) return false;
  }
  return true;
}

std::optional<std::vector<int>> cyclic_base_ordering(const Matroid& m, const std::vector<std::vector<int>>& bases,
                                                     bool block_mode) {
  const int r = m.rank();
  Mask ground = 0;
  std::vector<Mask> base_mask;
  for (const auto& b : bases) {
    Mask s = 0;
    for (int e : b) {
      if (e < 0 || e >= m.size) fail(ErrorCode::kNotBases, "element out of range");
      s |= bit(e);
    }
    if (popcount(s) != static_cast<int>(b.size()) || popcount(s) != r || !m.independent(s))
      fail(ErrorCode::kNotBases, "every set must be a base");
    if (s & ground) fail(ErrorCode::kNotBases, "bases must be pairwise disjoint");
    ground |= s;
    base_mask.push_back(s);
  }
  const int len = popcount(ground);
  std::vector<int> order;
  if (len == 0) return order;
  order.assign(len, -1);
  std::vector<Mask> block_base(len / r, 0);

  auto window_ok = [&](int p) {
    Mask w = 0;
    for (int i = std::max(0, p - r + 1); i <= p; ++i) w |= bit(order[i]);
    return m.independent(w);
  };
  auto wrap_ok = [&]() {
    for (int s = len - r + 1; s < len; ++s) {
      Mask w = 0;
      for (int i = 0; i < r; ++i) w |= bit(order[(s + i) % len]);
      if (!m.independent(w)) return false;
    }
    return true;
  };
  // Rotations are identified by fixing the first element, or the first block
  // to the first base. Block mode picks a block's base at its first position.
  auto run = [&](auto& self, int p, Mask used, Mask used_bases, bool chosen) -> bool {
    if (p == len) return wrap_ok();
    Mask candidates = ground & ~used;
    if (block_mode) {
      const int b = p / r;
      if (p % r == 0 && !chosen) {
        for (std::size_t i = 0; i < base_mask.size(); ++i) {
          if (test(used_bases, static_cast<int>(i)) || (b == 0 && i != 0)) continue;
          block_base[b] = base_mask[i];
          if (self(self, p, used, used_bases | bit(static_cast<int>(i)), true)) return true;
        }
        return false;
      }
      candidates &= block_base[b];
    } else if (p == 0) {
      candidates = bit(lowest_bit(ground));
    }
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      int e = lowest_bit(rest);
      order[p] = e;
      if (window_ok(p) && self(self, p + 1, used | bit(e), used_bases, false)) return true;
    }
    return false;
  };
  if (!run(run, 0, 0, 0, false)) return std::nullopt;
  return order;
}

// ---- 3-tournaments -------------------------------------------------------------

namespace {

ThreeTournament random_tournament(int n, std::mt19937_64& rng) {
  ThreeTournament t{n, std::vector<int>(ext::triple_count(n))};
  std::uniform_int_distribution<int> pick(0, 2);
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        int v[3] = {a, b, c};
        t.root[ext::triple_index(n, a, b, c)] = v[pick(rng)];
      }
  return t;
}

int root_of(const ThreeTournament& t, int a, int b, int c) { return t.root[ext::triple_index(t.n, a, b, c)]; }

}  // namespace

ThreeTournament random_three_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  return random_tournament(n, rng);
}

ThreeTournament min_root_tournament(int n) {
  ThreeTournament t{n, std::vector<int>(ext::triple_count(n))};
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) t.root[ext::triple_index(n, a, b, c)] = a;
  return t;
}

Mask dominated_by(const ThreeTournament& t, int x) {
  Mask out = 0;
  for (int y = 0; y < t.n; ++y)
    for (int z = y + 1; z < t.n; ++z)
      if (y != x && z != x && root_of(t, x, y, z) == x) out |= bit(y) | bit(z);
  return out;
}

bool dominates(const ThreeTournament& t, Mask x) {
  Mask covered = x;
  for_each_bit(x, [&](int v) { covered |= dominated_by(t, v); });
  return covered == low_mask(t.n);
}

Domination dom_3tournament(const ThreeTournament& t) {
  const int n = t.n;
  if (n > 30) fail(ErrorCode::kTooLarge, "exact domination needs n <= 30");
  if (n == 0) return {};
  std::vector<Mask> reach(n);
  for (int x = 0; x < n; ++x) reach[x] = dominated_by(t, x) | bit(x);
  const Mask full = low_mask(n);
  for (int s = 1; s <= n; ++s) {
    // Gosper's hack over s-subsets.
    for (Mask x = low_mask(s); x <= full;) {
      Mask covered = 0;
      for_each_bit(x, [&](int v) { covered |= reach[v]; });
      if (covered == full) return {s, x};
      Mask c = x & (~x + 1), r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return {n, full};
}

bool root_condition(const ThreeTournament& t, int same) {
  const int n = t.n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int count[4] = {0, 0, 0, 0};
          int v[4] = {a, b, c, d};
          int roots[4] = {root_of(t, a, b, c), root_of(t, a, b, d), root_of(t, a, c, d), root_of(t, b, c, d)};
          int best = 0;
          for (int r : roots)
            for (int i = 0; i < 4; ++i)
              if (v[i] == r) best = std::max(best, ++count[i]);
          if (best < same) return false;
        }
  return true;
}

DomScan dom_scan(int n, long long budget, std::uint64_t seed) {
  DomScan out;
  out.histogram.assign(n + 1, 0);
  for (long long i = 0; i < budget; ++i) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    ThreeTournament t = random_tournament(n, rng);
    int d = dom_3tournament(t).size;
    ++out.histogram[d];
    ++out.samples;
    if (d > out.max_dom || out.samples == 1) {
      out.max_dom = d;
      out.witness = t;
    }
  }
  return out;
}

// ---- Magic matrices ------------------------------------------------------------

BigInt count_line_sum(int n, int k, int min_entry) {
  if (n < 1 || k < 0 || min_entry < 0) fail(ErrorCode::kInvalidArgument, "need n >= 1, k >= 0, min_entry >= 0");
  if (n > 4 || k > 40) fail(ErrorCode::kTooLarge, "line-sum counting needs n <= 4 and k <= 40");
  if (k < n * min_entry) return 0;
  // Rows are added one at a time; the state is the multiset of remaining
  // column sums, since permuting columns does not change the count.
  std::unordered_map<std::uint64_t, BigInt> memo;
  auto encode = [](const std::vector<int>& rem, int rows) {
    std::uint64_t key = static_cast<std::uint64_t>(rows);
    for (int v : rem) key = key * 256 + static_cast<std::uint64_t>(v);
    return key;
  };
  auto count = [&](auto& self, std::vector<int> rem, int rows) -> BigInt {
    std::sort(rem.begin(), rem.end());
    if (rows == 1) {
      for (int v : rem)
        if (v < min_entry) return 0;
      return 1;
    }
    std::uint64_t key = encode(rem, rows);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    std::vector<int> row(n);
    auto choose = [&](auto& more, int j, int left) -> void {
      if (j == n - 1) {
        if (left < min_entry || left > rem[j] - min_entry * (rows - 1)) return;
        row[j] = left;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = rem[i] - row[i];
        total += self(self, next, rows - 1);
        return;
      }
      int hi = std::min(left - min_entry * (n - 1 - j), rem[j] - min_entry * (rows - 1));
      for (int x = min_entry; x <= hi; ++x) {
        row[j] = x;
        more(more, j + 1, left - x);
      }
    };
    choose(choose, 0, k);
    memo.emplace(key, total);
    return total;
  };
  return count(count, std::vector<int>(n, k), n);
}

Rational positive_fraction(int n, int k) {
  return Rational(count_positive_magic(n, k), count_magic(n, k));
}

std::vector<Rational> ehrhart_polynomial(int n) {
  const int d = (n - 1) * (n - 1);
  std::vector<Rational> poly(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    // Lagrange basis through 0..d, scaled by the value at i.
    std::vector<Rational> basis{Rational(1)};
    Rational scale(count_magic(n, i));
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        next[a + 1] += basis[a];
        next[a] -= basis[a] * j;
      }
      basis = std::move(next);
      scale /= Rational(i - j);
    }
    for (std::size_t a = 0; a < basis.size(); ++a) poly[a] += basis[a] * scale;
  }
  return poly;
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational v(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
  return v;
}

EhrhartCheck ehrhart_check(int n, int k_max) {
  EhrhartCheck out;
  auto h = ehrhart_polynomial(n);
  const int sign = n % 2 == 1 ? 1 : -1;  // (-1)^(n+1)
  for (int k = 0; k <= k_max; ++k) {
    bool poly_ok = evaluate(h, Rational(k)) == Rational(count_magic(n, k));
    bool recip_ok = k == 0 || evaluate(h, Rational(-k)) * sign == Rational(count_positive_magic(n, k));
    out.polynomial_matches = out.polynomial_matches && poly_ok;
    out.reciprocity = out.reciprocity && recip_ok;
    if ((!poly_ok || !recip_ok) && out.first_failure < 0) out.first_failure = k;
  }
  return out;
}

// ---- Path systems ----------------------------------------------------------------

namespace {

// Vertex sequence of `seq` as a path in r, or empty if it is not a simple path.
std::vector<int> path_vertices(const PathRealization& r, const std::vector<int>& seq) {
  if (seq.empty()) return {};
  auto [a, b] = r.edge_of[seq[0]];
  if (seq.size() == 1) return {a, b};
  auto [c, d] = r.edge_of[seq[1]];
  int start;
  if ((b == c || b == d) && a != c && a != d) start = a;
  else if ((a == c || a == d) && b != c && b != d) start = b;
  else return {};
  std::vector<int> verts{start};
  int cur = start;
  for (int e : seq) {
    auto [u, v] = r.edge_of[e];
    if (u == cur) cur = v;
    else if (v == cur) cur = u;
    else return {};
    verts.push_back(cur);
  }
  auto sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return verts;
}

}  // namespace

bool realizes(const PathRealization& r, const std::vector<std::vector<int>>& seqs) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : r.edge_of) {
    if (u == v || !r.graph.has_edge(u, v)) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  if (static_cast<int>(seen.size()) != r.graph.size()) return false;
  for (const auto& s : seqs)
    if (!s.empty() && path_vertices(r, s).empty()) return false;
  return true;
}

std::optional<PathRealization> realize_path_system(int labels, const std::vector<std::vector<int>>& seqs) {
  if (labels < 0) fail(ErrorCode::kInvalidArgument, "negative label count");
  if (labels > 12) fail(ErrorCode::kTooLarge, "path systems need at most 12 labels");
  for (const auto& s : seqs)
    for (int e : s)
      if (e < 0 || e >= labels) fail(ErrorCode::kInvalidArgument, "label out of range");
  // Endpoint 2e is the tail of label e, 2e + 1 its head. Orienting every label
  // along each sequence forces head(e_i) = tail(e_{i+1}); the finest partition
  // of endpoints with those identifications is the only one worth testing.
  const int ends = 2 * labels;
  std::vector<int> parent(ends);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto build = [&]() {
    PathRealization r;
    std::vector<int> id(ends, -1);
    int next = 0;
    r.edge_of.resize(labels);
    for (int e = 0; e < labels; ++e) {
      int a = find(2 * e), b = find(2 * e + 1);
      if (id[a] < 0) id[a] = next++;
      if (id[b] < 0) id[b] = next++;
      r.edge_of[e] = {id[a], id[b]};
    }
    r.graph = Graph(next);
    for (auto [u, v] : r.edge_of)
      if (u != v) r.graph.add_edge(u, v);
    return r;
  };
  std::optional<PathRealization> found;
  auto dfs = [&](auto& self, std::size_t si, std::size_t pos, int prev_head) -> bool {
    if (si == seqs.size()) {
      PathRealization r = build();
      if (!realizes(r, seqs)) return false;
      found = std::move(r);
      return true;
    }
    const auto& s = seqs[si];
    if (pos == s.size()) return self(self, si + 1, 0, -1);
    const int e = s[pos];
    for (int flip = 0; flip < (s.size() == 1 ? 1 : 2); ++flip) {
      int tail = 2 * e + flip, head = 2 * e + 1 - flip;
      auto saved = parent;
      if (prev_head >= 0) {
        int a = find(prev_head), b = find(tail);
        if (a != b) parent[a] = b;
      }
      bool loop = false;
      for (int l = 0; l < labels && !loop; ++l) loop = find(2 * l) == find(2 * l + 1);
      if (!loop && self(self, si, pos + 1, head)) return true;
      parent = std::move(saved);
    }
    return false;
  };
  dfs(dfs, 0, 0, -1);
  return found;
}

// ---- Symmetric-group Ramsey ---------------------------------------------------------

int permutation_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    int f = 1;
    for (int t = 2; t < n - i; ++t) f *= t;
    rank += smaller * f;
  }
  return rank;
}

std::vector<std::vector<int>> symmetric_copies(int n, int r) {
  if (n < 0 || r < 1) fail(ErrorCode::kInvalidArgument, "need n >= 0 and r >= 1");
  if (n > 6) fail(ErrorCode::kTooLarge, "copies of S_r are listed for n <= 6");
  std::set<std::vector<int>> copies;
  if (r > n) return {};
  std::vector<int> block(n, 0);
  auto assign = [&](auto& self, int i) -> void {
    if (i < n) {
      for (int b = 0; b < r; ++b) {
        block[i] = b;
        self(self, i + 1);
      }
      return;
    }
    std::vector<std::vector<int>> members(r);
    for (int v = 0; v < n; ++v) members[block[v]].push_back(v);
    for (const auto& m : members)
      if (m.empty()) return;
    // Every choice of word order inside each block.
    std::vector<std::vector<int>> words = members;
    auto words_rec = [&](auto& wself, int b) -> void {
      if (b == r) {
        std::vector<int> order(r);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> copy;
        do {
          std::vector<int> perm;
          for (int x : order) perm.insert(perm.end(), words[x].begin(), words[x].end());
          copy.push_back(permutation_rank(perm));
        } while (std::next_permutation(order.begin(), order.end()));
        std::sort(copy.begin(), copy.end());
        copies.insert(copy);
        return;
      }
      std::sort(words[b].begin(), words[b].end());
      do wself(wself, b + 1);
      while (std::next_permutation(words[b].begin(), words[b].end()));
    };
    words_rec(words_rec, 0);
  };
  assign(assign, 0);
  return {copies.begin(), copies.end()};
}

bool sym_ramsey_check(int n, int k, int r) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "need at least one colour");
  if (n > 4) fail(ErrorCode::kTooLarge, "symmetric-group Ramsey search needs n <= 4");
  auto copies = symmetric_copies(n, r);
  int total = 1;
  for (int i = 2; i <= n; ++i) total *= i;
  // Copies are checked when their largest permutation receives a colour.
  std::vector<std::vector<int>> closing(total);
  for (std::size_t c = 0; c < copies.size(); ++c) closing[copies[c].back()].push_back(static_cast<int>(c));
  std::vector<int> colour(total, -1);
  auto dfs = [&](auto& self, int p, int used) -> bool {
    if (p == total) return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      colour[p] = c;
      bool ok = true;
      for (int id : closing[p]) {
        bool mono = true;
        for (int q : copies[id]) mono = mono && colour[q] == c;
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, p + 1, std::max(used, c + 1))) return true;
    }
    colour[p] = -1;
    return false;
  };
  // True when no colouring avoids a monochromatic copy.
  return !dfs(dfs, 0, 0);
}

}  // namespace iml::des
