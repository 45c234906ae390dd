#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "iml/coloring/coloring.hpp"
#include "iml/core/error.hpp"
#include "iml/core/structure.hpp"
#include "iml/gen/generate.hpp"

namespace iml::color {

namespace {

// Injective edge-preserving maps of `pattern` into host vertices inside `allowed`.
class Embedder {
 public:
  explicit Embedder(const Graph& pattern) : p_(pattern), n_(pattern.order()) {
    // Visit pattern vertices so that each one after the first in its component
    // already has a mapped neighbour.
    std::vector<bool> seen(n_, false);
    for (int start = 0; start < n_; ++start) {
      if (seen[start]) continue;
      std::vector<int> queue{start};
      seen[start] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        order_.push_back(queue[h]);
        for (int w : p_.neighbors(queue[h]))
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
  }

  bool embeds(const std::vector<Mask>& host, Mask allowed) {
    if (popcount(allowed) < n_) return false;
    map_.assign(n_, -1);
    return extend(host, allowed, 0, 0);
  }

 private:
  bool extend(const std::vector<Mask>& host, Mask allowed, int i, Mask used) {
    if (i == n_) return true;
    int v = order_[i];
    Mask cand = allowed & ~used;
    int need = p_.degree(v);
    for (int u : p_.neighbors(v))
      if (map_[u] >= 0) cand &= host[map_[u]];
    for (Mask rest = cand; rest; rest &= rest - 1) {
      int x = lowest_bit(rest);
      if (popcount(host[x] & allowed) < need) continue;
      map_[v] = x;
      if (extend(host, allowed, i + 1, used | bit(x))) return true;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& p_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
};

std::vector<Mask> rows(const Graph& g) {
  std::vector<Mask> r(g.order());
  for (int v = 0; v < g.order(); ++v) r[v] = g.row(v);
  return r;
}

// contains[S] for every S of V(F): F[S] has a copy of G. Upward closed, so a
// set inherits the answer from any subset missing one vertex.
std::vector<char> containment_table(const Graph& f, const Graph& g) {
  const int n = f.order();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<char> table(subsets, 0);
  auto host = rows(f);
  Embedder emb(g);
  const int gn = g.order(), ge = g.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    Mask m = s;
    if (popcount(m) < gn) continue;
    bool inherited = false;
    for (Mask rest = m; rest && !inherited; rest &= rest - 1) inherited = table[m & ~(rest & (~rest + 1))];
    if (inherited) {
      table[s] = 1;
      continue;
    }
    if (f.edges_within(m) < ge) continue;
    table[s] = emb.embeds(host, m);
  }
  return table;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (!host.small() || !pattern.small()) fail(ErrorCode::kTooLarge, "subgraph search needs at most 64 vertices");
  Embedder emb(pattern);
  return emb.embeds(rows(host), host.all());
}

std::optional<std::vector<int>> avoiding_colouring(const Graph& f, const Graph& g, int r) {
  const int n = f.order();
  if (r < 1) fail(ErrorCode::kInvalidArgument, "need at least one colour");
  if (n > 20) fail(ErrorCode::kTooLarge, "arrowing scan needs |V(F)| <= 20");
  double work = (n - 1) * std::log2(static_cast<double>(r));
  if (n > 0 && work > 26) fail(ErrorCode::kTooLarge, "too many colourings to scan");
  if (g.order() == 0) return std::nullopt;  // the empty graph is in every class
  auto table = containment_table(f, g);
  std::vector<Mask> cls(r, 0);
  std::vector<int> col(n, -1);
  // Colours are interchangeable: a vertex may open only the next unused colour.
  auto solve = [&](auto& self, int v, int used) -> bool {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, r); ++c) {
      Mask next = cls[c] | bit(v);
      if (table[next]) continue;
      cls[c] = next;
      col[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      cls[c] &= ~bit(v);
    }
    return false;
  };
  if (!solve(solve, 0, 0)) return std::nullopt;
  return col;
}

bool arrows_vertex(const Graph& f, const Graph& g, int r) { return !avoiding_colouring(f, g, r).has_value(); }

McrScan mcr_scan(const Graph& g, int r, int n_max) {
  McrScan out;
  const bool connected = is_connected(g);
  for (int n = std::max(1, g.order()); n <= n_max; ++n) {
    gen::GenSpec spec;
    spec.n = n;
    // A colouring of a disjoint union colours each component separately, so
    // for connected G only connected F need to be scanned.
    spec.connectivity = connected && n > 1 ? 1 : 0;
    for (const auto& f : gen::generate_graphs(spec)) {
      ++out.graphs_checked;
      if (out.found && Rational(2 * f.size(), n) >= out.best_mad) continue;
      Rational m = mad(f);
      if (out.found && m >= out.best_mad) continue;
      if (!arrows_vertex(f, g, r)) continue;
      ++out.arrowing;
      out.found = true;
      out.best_mad = m;
      out.witness = f;
    }
  }
  return out;
}

std::optional<std::vector<int>> extend_pendant_precoloring(const Graph& g, const std::vector<PendantColour>& pre,
                                                           int d, int f) {
  if (d < 0 || f < 0) fail(ErrorCode::kInvalidArgument, "d and f must be non-negative");
  if (g.order() && g.max_degree() > d) fail(ErrorCode::kInvalidArgument, "max degree exceeds d");
  if (static_cast<int>(pre.size()) > d) fail(ErrorCode::kBadPrecolouring, "more than d precoloured edges");
  auto edges = g.edges();
  std::vector<int> fixed(edges.size(), -1);
  for (const auto& p : pre) {
    if (!g.has_edge(p.u, p.v)) fail(ErrorCode::kBadPrecolouring, "precoloured pair is not an edge");
    if (g.degree(p.u) != 1 && g.degree(p.v) != 1) fail(ErrorCode::kBadPrecolouring, "precoloured edge is not pendant");
    if (p.colour < 0 || p.colour >= d + f) fail(ErrorCode::kBadPrecolouring, "colour outside the palette");
    auto key = std::minmax(p.u, p.v);
    auto idx = std::lower_bound(edges.begin(), edges.end(), std::pair<int, int>(key.first, key.second)) - edges.begin();
    if (fixed[idx] >= 0) fail(ErrorCode::kBadPrecolouring, "edge precoloured twice");
    fixed[idx] = p.colour;
  }
  for (std::size_t a = 0; a < pre.size(); ++a)
    for (std::size_t b = a + 1; b < pre.size(); ++b) {
      const auto &x = pre[a], &y = pre[b];
      bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      if (touch && x.colour == y.colour) fail(ErrorCode::kBadPrecolouring, "incident precoloured edges share a colour");
    }
  return edge_colouring(g, d + f, fixed);
}

PendantScan pendant_f_scan(int d, int n_max) {
  if (d < 1) fail(ErrorCode::kInvalidArgument, "d must be positive");
  PendantScan out;
  for (int n = 2; n <= n_max; ++n) {
    gen::GenSpec spec;
    spec.n = n;
    spec.max_degree = d;
    spec.connectivity = 1;
    for (const auto& g : gen::generate_graphs(spec)) {
      std::vector<std::pair<int, int>> pendant;
      for (auto [u, v] : g.edges())
        if (g.degree(u) == 1 || g.degree(v) == 1) pendant.emplace_back(u, v);
      const int p = static_cast<int>(pendant.size());
      for (Mask chosen = 0; chosen < (Mask{1} << p); ++chosen) {
        if (popcount(chosen) > d) continue;
        auto idx = bits_of(chosen);
        // Colour names do not matter, only which chosen edges share a colour:
        // enumerate set partitions as restricted growth strings.
        std::vector<int> block(idx.size(), 0);
        auto touches = [&](int a, int b) {
          auto [u, v] = pendant[idx[a]];
          auto [x, y] = pendant[idx[b]];
          return u == x || u == y || v == x || v == y;
        };
        auto visit = [&](auto& self, std::size_t i, int blocks) -> void {
          if (i == idx.size()) {
            std::vector<PendantColour> pre;
            for (std::size_t a = 0; a < idx.size(); ++a)
              pre.push_back({pendant[idx[a]].first, pendant[idx[a]].second, block[a]});
            ++out.instances;
            int f = std::max(0, blocks - d);
            while (!extend_pendant_precoloring(g, pre, d, f)) ++f;
            if (f > out.max_forced_f) {
              out.max_forced_f = f;
              out.witness = g;
              out.witness_precolouring = pre;
            }
            return;
          }
          for (int b = 0; b <= blocks; ++b) {
            bool ok = true;
            for (std::size_t a = 0; a < i && ok; ++a) ok = block[a] != b || !touches(static_cast<int>(a), static_cast<int>(i));
            if (!ok) continue;
            block[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
          }
        };
        visit(visit, 0, 0);
      }
    }
  }
  return out;
}

Graph circle_graph(const ChordDiagram& diagram) {
  const auto& ends = diagram.endpoints;
  if (ends.size() % 2) fail(ErrorCode::kInvalidArgument, "a chord diagram has an even number of endpoints");
  const int c = static_cast<int>(ends.size() / 2);
  std::vector<std::vector<int>> pos(c);
  for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
    if (ends[i] < 0 || ends[i] >= c) fail(ErrorCode::kInvalidArgument, "chord label out of range");
    pos[ends[i]].push_back(i);
  }
  for (const auto& p : pos)
    if (p.size() != 2) fail(ErrorCode::kInvalidArgument, "each chord needs exactly two endpoints");
  Graph g(c);
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      bool inside0 = pos[a][0] < pos[b][0] && pos[b][0] < pos[a][1];
      bool inside1 = pos[a][0] < pos[b][1] && pos[b][1] < pos[a][1];
      if (inside0 != inside1) g.add_edge(a, b);
    }
  return g;
}

std::vector<Mask> shift_graph_vertices(int n, int r) {
  std::vector<Mask> out;
  if (r < 0 || r > n) return out;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    out.push_back(mask_of(pick));
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Graph shift_graph_cyclic(int n, int r, const std::string& pattern) {
  if (r != 2 && r != 3) fail(ErrorCode::kBadPattern, "r must be 2 or 3");
  if (static_cast<int>(pattern.size()) != 2 * r || std::count(pattern.begin(), pattern.end(), 'X') != r ||
      std::count(pattern.begin(), pattern.end(), 'O') != r)
    fail(ErrorCode::kBadPattern, "pattern needs r X's and r O's");
  if (n > 64) fail(ErrorCode::kTooLarge, "ground set limited to 64 elements");
  std::set<std::string> words;
  std::string swapped = pattern;
  for (char& ch : swapped) ch = ch == 'X' ? 'O' : 'X';
  for (const auto& w : {pattern, swapped})
    for (int s = 0; s < 2 * r; ++s) words.insert(w.substr(s) + w.substr(0, s));
  auto verts = shift_graph_vertices(n, r);
  Graph g(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (verts[a] & verts[b]) continue;
      std::string w;
      for_each_bit(verts[a] | verts[b], [&](int x) { w += test(verts[a], x) ? 'X' : 'O'; });
      if (words.count(w)) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return g;
}

HyperStrong hyper_strong_chromatic(const Hypergraph& h, bool allow_sampling, std::uint64_t seed) {
  HyperStrong out;
  out.rank = h.rank();
  out.chi_s = chromatic_number(h.clique_expansion());
  const int n = h.order();
  std::vector<std::vector<int>> members;
  long long total = 1;
  for (Mask e : h.edges()) {
    if (popcount(e) < 2) continue;
    members.push_back(bits_of(e));
    long long pairs = static_cast<long long>(popcount(e)) * (popcount(e) - 1) / 2;
    total = total > kMaxDerivedGraphs ? total : total * pairs;
  }
  out.chi_d = n > 0 ? 1 : 0;
  auto pair_of = [&](const std::vector<int>& m, long long idx) {
    const int s = static_cast<int>(m.size());
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (idx-- == 0) return std::pair<int, int>(m[a], m[b]);
    throw std::logic_error("pair index out of range");
  };
  // Only a derived graph beating the current maximum matters, and no derived
  // graph can beat chi_s.
  auto consider = [&](const std::vector<long long>& choice) {
    Graph d(n);
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto [u, v] = pair_of(members[i], choice[i]);
      d.add_edge(u, v);
    }
    ++out.derived_graphs;
    if (!k_colouring(d, out.chi_d)) out.chi_d = chromatic_number(d);
  };
  std::vector<long long> choice(members.size(), 0);
  if (total <= kMaxDerivedGraphs) {
    while (true) {
      consider(choice);
      if (out.chi_d == out.chi_s) break;
      std::size_t i = 0;
      for (; i < members.size(); ++i) {
        long long s = static_cast<long long>(members[i].size());
        if (++choice[i] < s * (s - 1) / 2) break;
        choice[i] = 0;
      }
      if (i == members.size()) break;
    }
    return out;
  }
  if (!allow_sampling) fail(ErrorCode::kTooLarge, "too many derived graphs for exact enumeration");
  out.chi_d_exact = false;
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < 100000 && out.chi_d < out.chi_s; ++t) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      long long s = static_cast<long long>(members[i].size());
      choice[i] = static_cast<long long>(rng() % static_cast<std::uint64_t>(s * (s - 1) / 2));
    }
    consider(choice);
  }
  if (out.chi_d == out.chi_s) out.chi_d_exact = true;
  return out;
}

CriticalScan critical_min_degree_scan(int k, int n_max) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");
  CriticalScan out;
  for (int n = k; n <= n_max; ++n) {
    gen::GenSpec spec;
    spec.n = n;
    spec.min_degree = k - 1;
    spec.connectivity = n > 1 ? 1 : 0;
    for (const auto& g : gen::generate_graphs(spec)) {
      if (!is_k_critical(g, k)) continue;
      ++out.critical;
      int delta = g.min_degree();
      if (delta > out.max_min_degree) {
        out.max_min_degree = delta;
        out.witness = g;
      }
    }
  }
  return out;
}

}  // namespace iml::color
