#include "iml/gen/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/core/structure.hpp"
#include "iml/gen/canonical.hpp"

namespace iml::gen {

namespace {

int effective_max_degree(const GenSpec& s) {
  int d = s.max_degree < 0 ? s.n : s.max_degree;
  if (s.regular >= 0) d = std::min(d, s.regular);
  return d;
}

void check_satisfiable(const GenSpec& s) {
  auto bad = [](const std::string& why) { fail(ErrorCode::kUnsatisfiable, why); };
  if (s.n < 0) bad("negative order");
  switch (s.kind) {
    case GraphClass::kCubic:
      if (s.n % 2 != 0 || s.n < 4) bad("cubic graphs need an even order of at least 4");
      if (s.min_degree > 3 || (s.max_degree >= 0 && s.max_degree < 3) || (s.regular >= 0 && s.regular != 3))
        bad("degree constraints contradict cubic");
      if (s.connectivity > 3) bad("cubic graphs are at most 3-connected");
      break;
    case GraphClass::kTournament:
    case GraphClass::kRegularTournament:
      if (s.n > s.tournament_cap) bad("tournament order above the configured cap");
      if (s.kind == GraphClass::kRegularTournament && s.n % 2 == 0) bad("regular tournaments have odd order");
      if (s.bipartite && s.n > 2) bad("tournaments on 3+ vertices are not bipartite");
      break;
    case GraphClass::kGraph: {
      int hi = effective_max_degree(s);
      int lo = std::max(s.min_degree, s.regular < 0 ? 0 : s.regular);
      if (lo > hi) bad("minimum degree exceeds maximum degree");
      if (s.n > 0 && lo > s.n - 1) bad("degree exceeds n-1");
      if (s.regular >= 0 && s.regular % 2 == 1 && s.n % 2 == 1) bad("odd-regular graph needs even order");
      if (s.n > 0 && s.connectivity > s.n - 1) bad("connectivity exceeds n-1");
      break;
    }
  }
}

Graph canonical_graph(const CanonicalForm& cf) {
  return io::from_graph6(cf.certificate);
}

// Vertex-by-vertex canonical augmentation: the deleted vertex of a child is
// the highest-labelled vertex among those of minimum degree.
std::vector<Graph> augment_graphs(int n, int max_degree, bool bipartite,
                                  const std::function<bool(const Graph&)>& keep = {}) {
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& parent : level) {
      for (Mask s = 0; s < bit(k); ++s) {
        if (popcount(s) > max_degree) continue;
        bool ok = true;
        for_each_bit(s, [&](int v) { ok &= parent.degree(v) < max_degree; });
        if (!ok) continue;
        Graph child(k + 1);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for_each_bit(s, [&](int v) { child.add_edge(k, v); });
        if (child.min_degree() != popcount(s)) continue;
        if (bipartite && !is_bipartite(child)) continue;
        if (keep && !keep(child)) continue;
        auto cf = canonical_form(child);
        int chosen = -1;
        for (int v = 0; v <= k; ++v)
          if (child.degree(v) == popcount(s) && (chosen < 0 || cf.labeling[v] > cf.labeling[chosen])) chosen = v;
        if (cf.orbits[chosen] != cf.orbits[k]) continue;
        next.emplace(cf.certificate, canonical_graph(cf));
      }
    }
    level.clear();
    for (auto& [cert, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Digraph> augment_tournaments(int n) {
  if (n == 0) return {Digraph(0)};
  std::vector<Digraph> level{Digraph(1)};
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Digraph> next;
    for (const Digraph& parent : level) {
      for (Mask s = 0; s < bit(k); ++s) {
        Digraph child(k + 1);
        for (auto [u, v] : parent.arcs()) child.add_arc(u, v);
        for (int v = 0; v < k; ++v) {
          if (test(s, v)) child.add_arc(k, v);
          else child.add_arc(v, k);
        }
        int top = 0;
        for (int v = 0; v <= k; ++v) top = std::max(top, child.out_degree(v));
        if (child.out_degree(k) != top) continue;
        auto cf = canonical_form(child);
        int chosen = -1;
        for (int v = 0; v <= k; ++v)
          if (child.out_degree(v) == top && (chosen < 0 || cf.labeling[v] > cf.labeling[chosen])) chosen = v;
        if (cf.orbits[chosen] != cf.orbits[k]) continue;
        next.emplace(cf.certificate, io::from_digraph6(cf.certificate));
      }
    }
    level.clear();
    for (auto& [cert, d] : next) level.push_back(std::move(d));
  }
  return level;
}

std::vector<std::vector<Graph>>& cubic_cache() {
  static std::vector<std::vector<Graph>> cache;
  return cache;
}

// Appends a chain of `len` diamonds between existing vertices p and q.
void add_diamond_chain(Graph& g, int& next, int p, int q, int len) {
  int prev = p;
  for (int i = 0; i < len; ++i) {
    int a = next, b = next + 1, c = next + 2, d = next + 3;
    next += 4;
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(c, d);
    g.add_edge(prev, a);
    prev = d;
  }
  g.add_edge(prev, q);
}

// Irreducible graphs whose diamond chains hang off two branch vertices: the
// theta multigraph (three parallel chains) and the dumbbell (two loops joined
// by a chain). Together with rings of diamonds these are the only
// irreducible connected cubic graphs below 28 vertices; the next family needs a
// four-vertex cubic multigraph skeleton with at least six chains.
std::vector<Graph> diamond_chain_seeds(int n) {
  std::vector<Graph> out;
  if (n < 14 || (n - 2) % 4 != 0) return out;
  int total = (n - 2) / 4;
  for (int a = 1; a <= total; ++a)
    for (int b = a; a + b < total; ++b) {
      int c = total - a - b;
      if (c < b) continue;
      Graph g(n);
      int next = 2;
      add_diamond_chain(g, next, 0, 1, a);
      add_diamond_chain(g, next, 0, 1, b);
      add_diamond_chain(g, next, 0, 1, c);
      out.push_back(g);
    }
  for (int l1 = 1; l1 <= total; ++l1)
    for (int l2 = l1; l1 + l2 < total; ++l2) {
      Graph g(n);
      int next = 2;
      add_diamond_chain(g, next, 0, 0, l1);
      add_diamond_chain(g, next, 1, 1, l2);
      add_diamond_chain(g, next, 0, 1, total - l1 - l2);
      out.push_back(g);
    }
  return out;
}

std::mutex& cubic_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Graph> all_cubic_locked(int n);

// Every connected cubic graph other than K_4 and the rings of diamonds has an
// edge whose removal (suppressing its two endpoints) leaves a simple cubic
// graph, possibly with two components. Inverting that over all parents of
// order n-2 and adding the irreducible seeds yields every class.
std::vector<Graph> connected_cubic_locked(int n) {
  auto& cache = cubic_cache();
  if (cache.empty()) cache.push_back({graphs::complete(4)});
  while (static_cast<int>(cache.size()) < (n - 2) / 2) {
    int m = 4 + 2 * static_cast<int>(cache.size());  // order of the new level
    std::map<std::string, Graph> next;
    auto accept = [&](const Graph& h) {
      auto cf = canonical_form(h);
      if (!next.count(cf.certificate)) next.emplace(cf.certificate, canonical_graph(cf));
    };
    if (m % 4 == 0) accept(ring_of_diamonds(m / 4));
    for (const Graph& seed : diamond_chain_seeds(m)) accept(seed);
    for (const Graph& g : all_cubic_locked(m - 2)) {
      int comps = component_count(g);
      if (comps > 2) continue;
      auto label = component_labels(g);
      auto es = g.edges();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          if (comps == 2 && label[es[i].first] == label[es[j].first]) continue;
          Graph h(m);
          for (std::size_t e = 0; e < es.size(); ++e)
            if (e != i && e != j) h.add_edge(es[e].first, es[e].second);
          int x = m - 2, y = m - 1;
          h.add_edge(es[i].first, x);
          h.add_edge(x, es[i].second);
          h.add_edge(es[j].first, y);
          h.add_edge(y, es[j].second);
          h.add_edge(x, y);
          accept(h);
        }
    }
    std::vector<Graph> level;
    for (auto& [cert, g] : next) level.push_back(std::move(g));
    cache.push_back(std::move(level));
  }
  return cache[(n - 4) / 2];
}

// Multisets of connected components with nondecreasing (order, index).
std::vector<Graph> all_cubic_locked(int n) {
  std::map<std::string, Graph> sorted;
  std::function<void(int, int, int, Graph)> rec = [&](int left, int min_order, int min_index, Graph acc) {
    if (left == 0) {
      auto cf = canonical_form(acc);
      sorted.emplace(cf.certificate, canonical_graph(cf));
      return;
    }
    for (int m = min_order; m <= left; m += 2) {
      if (left - m != 0 && left - m < 4) continue;
      auto comps = connected_cubic_locked(m);
      for (int i = (m == min_order ? min_index : 0); i < static_cast<int>(comps.size()); ++i)
        rec(left - m, m, i, graphs::disjoint_union(acc, comps[i]));
    }
  };
  rec(n, 4, 0, Graph(0));
  std::vector<Graph> out;
  for (auto& [cert, g] : sorted) out.push_back(std::move(g));
  return out;
}

}  // namespace

bool satisfies(const Graph& g, const GenSpec& spec) {
  if (g.order() != spec.n) return false;
  int lo = g.min_degree(), hi = g.max_degree();
  if (lo < spec.min_degree) return false;
  if (spec.max_degree >= 0 && hi > spec.max_degree) return false;
  if (spec.regular >= 0 && (lo != spec.regular || hi != spec.regular)) return false;
  if (spec.kind == GraphClass::kCubic && (lo != 3 || hi != 3)) return false;
  if (spec.bipartite && !is_bipartite(g)) return false;
  if (spec.connectivity > 0 && vertex_connectivity(g) < spec.connectivity) return false;
  return true;
}

Graph ring_of_diamonds(int k) {
  // k copies of K_4 minus an edge; the degree-2 vertices of consecutive
  // diamonds are joined in a ring.
  Graph g(4 * k);
  for (int i = 0; i < k; ++i) {
    int a = 4 * i, b = a + 1, c = a + 2, d = a + 3;
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(c, d);
    g.add_edge(d, 4 * ((i + 1) % k));
  }
  return g;
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::kUnsatisfiable, "cubic graphs need an even order of at least 4");
  if (n > kMaxCubicOrder) fail(ErrorCode::kTooLarge, "cubic generation is complete only up to 26 vertices");
  std::lock_guard<std::mutex> lock(cubic_mutex());
  return connected_cubic_locked(n);
}

std::vector<Graph> cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::kUnsatisfiable, "cubic graphs need an even order of at least 4");
  if (n > kMaxCubicOrder) fail(ErrorCode::kTooLarge, "cubic generation is complete only up to 26 vertices");
  std::lock_guard<std::mutex> lock(cubic_mutex());
  return all_cubic_locked(n);
}

std::vector<Graph> generate_graphs(const GenSpec& spec) {
  check_satisfiable(spec);
  std::vector<Graph> candidates;
  if (spec.kind == GraphClass::kCubic) {
    candidates = spec.connectivity >= 1 ? connected_cubic_graphs(spec.n) : cubic_graphs(spec.n);
  } else if (spec.kind == GraphClass::kGraph) {
    candidates = augment_graphs(spec.n, effective_max_degree(spec), spec.bipartite);
  } else {
    fail(ErrorCode::kInvalidArgument, "tournament spec passed to generate_graphs");
  }
  std::vector<Graph> out;
  for (auto& g : candidates)
    if (satisfies(g, spec)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> generate_hereditary(int n, const std::function<bool(const Graph&)>& keep) {
  if (n < 0) fail(ErrorCode::kUnsatisfiable, "negative order");
  if (n > 0 && !keep(Graph(1))) return {};
  auto out = augment_graphs(n, n, false, keep);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return io::to_graph6(a) < io::to_graph6(b); });
  return out;
}

std::vector<Digraph> generate_tournaments(const GenSpec& spec) {
  check_satisfiable(spec);
  if (spec.kind != GraphClass::kTournament && spec.kind != GraphClass::kRegularTournament)
    fail(ErrorCode::kInvalidArgument, "graph spec passed to generate_tournaments");
  auto all = augment_tournaments(spec.n);
  if (spec.kind == GraphClass::kTournament) return all;
  std::vector<Digraph> out;
  for (auto& t : all)
    if (t.is_regular_tournament()) out.push_back(std::move(t));
  return out;
}

std::vector<std::string> generate_lines(const GenSpec& spec) {
  std::vector<std::string> lines;
  if (spec.kind == GraphClass::kTournament || spec.kind == GraphClass::kRegularTournament) {
    for (const auto& t : generate_tournaments(spec)) lines.push_back(io::to_digraph6(t));
  } else {
    for (const auto& g : generate_graphs(spec)) lines.push_back(io::to_graph6(g));
  }
  return lines;
}

bool is_cyclically_k_edge_connected(const Graph& g, int k) {
  auto es = g.edges();
  int m = static_cast<int>(es.size());
  std::vector<int> chosen;
  std::function<bool(int)> has_cyclic_cut = [&](int start) -> bool {
    Graph h = g;
    for (int i : chosen) h.remove_edge(es[i].first, es[i].second);
    auto label = component_labels(h);
    int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<int> vc(comps, 0), ec(comps, 0);
    for (int v = 0; v < h.order(); ++v) ++vc[label[v]];
    for (auto [u, v] : h.edges()) ++ec[label[u]];
    int cyclic = 0;
    for (int c = 0; c < comps; ++c) cyclic += ec[c] >= vc[c];
    if (cyclic >= 2) return true;
    if (static_cast<int>(chosen.size()) + 1 >= k) return false;
    for (int i = start; i < m; ++i) {
      chosen.push_back(i);
      bool found = has_cyclic_cut(i + 1);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  return !has_cyclic_cut(0);
}

AutMaximum max_aut_3connected_cubic(int n) {
  AutMaximum result;
  result.reference_bound = n * std::pow(2.0, n / 4.0);
  for (const Graph& g : connected_cubic_graphs(n)) {
    if (vertex_connectivity(g) < 3) continue;
    BigInt order = canonical_form(g).aut_order;
    if (order > result.max_order) {
      result.max_order = order;
      result.witnesses.clear();
    }
    if (order == result.max_order) result.witnesses.push_back(g);
  }
  return result;
}

GenSpec spec_from_json(const nlohmann::json& j) {
  GenSpec s;
  try {
    s.n = j.at("n").get<int>();
    std::string kind = j.value("class", std::string("graph"));
    if (kind == "graph") s.kind = GraphClass::kGraph;
    else if (kind == "cubic") s.kind = GraphClass::kCubic;
    else if (kind == "tournament") s.kind = GraphClass::kTournament;
    else if (kind == "regular-tournament") s.kind = GraphClass::kRegularTournament;
    else fail(ErrorCode::kBadParams, "unknown class '" + kind + "'");
    s.min_degree = j.value("min_degree", 0);
    s.max_degree = j.value("max_degree", -1);
    s.regular = j.value("regular", -1);
    s.connectivity = j.value("connectivity", 0);
    s.bipartite = j.value("bipartite", false);
    s.tournament_cap = j.value("tournament_cap", 9);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kBadParams, e.what());
  }
  return s;
}

nlohmann::json to_json(const GenSpec& s) {
  static const char* names[] = {"graph", "cubic", "tournament", "regular-tournament"};
  return {{"n", s.n},
          {"class", names[static_cast<int>(s.kind)]},
          {"min_degree", s.min_degree},
          {"max_degree", s.max_degree},
          {"regular", s.regular},
          {"connectivity", s.connectivity},
          {"bipartite", s.bipartite},
          {"tournament_cap", s.tournament_cap}};
}

}  // namespace iml::gen
