#include "iml/families/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "iml/core/error.hpp"
#include "iml/core/flow.hpp"
#include "iml/core/random.hpp"
#include "iml/core/structure.hpp"

namespace iml::fam {

namespace {

bool by_size(Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; }

bool compatible(Mask a, Mask b, const FamilyConstraints& c) {
  if (popcount(a & b) < c.intersecting) return false;
  if (c.antichain && a != b && ((a & b) == a || (a & b) == b)) return false;
  if (c.diameter >= 0 && popcount(a ^ b) > c.diameter) return false;
  return true;
}

}  // namespace

bool satisfies(const std::vector<Mask>& family, const FamilyConstraints& c) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      if (j > i && family[i] == family[j]) return false;
      if (!compatible(family[i], family[j], c)) return false;
    }
  return true;
}

std::string subset_string(Mask s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += test(s, i) ? '1' : '0';
  return out;
}

FamilyResult max_family(int n, const FamilyConstraints& c) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "ground set size must be non-negative");
  if (n > kMaxFamilyGround) fail(ErrorCode::kTooLarge, "family search needs n <= 10");
  std::vector<Mask> sets;
  for (Mask s = 0; s < bit(n); ++s)
    if (compatible(s, s, c)) sets.push_back(s);
  std::sort(sets.begin(), sets.end(), by_size);
  Graph compat(static_cast<int>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (compatible(sets[i], sets[j], c)) compat.add_edge(static_cast<int>(i), static_cast<int>(j));
  FamilyResult out;
  for (int v : max_clique(compat)) out.family.push_back(sets[v]);
  std::sort(out.family.begin(), out.family.end(), by_size);
  out.size = static_cast<int>(out.family.size());
  if (!satisfies(out.family, c)) throw std::logic_error("maximum family violates its constraints");
  return out;
}

std::vector<Mask> independence_complex(const Graph& g) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "independence complex needs at most 64 vertices");
  const int n = g.order();
  std::vector<Mask> out;
  auto rec = [&](auto& self, int v, Mask s, Mask blocked) -> void {
    if (v == n) {
      if (out.size() >= kMaxComplexSize) fail(ErrorCode::kTooLarge, "more than 10^6 independent sets");
      out.push_back(s);
      return;
    }
    self(self, v + 1, s, blocked);
    if (!test(blocked, v)) self(self, v + 1, s | bit(v), blocked | g.row(v));
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

std::vector<long long> layer_profile(const Graph& g) {
  std::vector<long long> layers;
  for (Mask s : independence_complex(g)) {
    std::size_t r = static_cast<std::size_t>(popcount(s));
    if (layers.size() <= r) layers.resize(r + 1, 0);
    ++layers[r];
  }
  return layers;
}

WidthResult width_independence_complex(const Graph& g) {
  auto q = independence_complex(g);
  const int m = static_cast<int>(q.size());
  std::unordered_map<Mask, int> index;
  index.reserve(q.size() * 2);
  for (int i = 0; i < m; ++i) index[q[i]] = i;
  WidthResult out;
  for (long long c : layer_profile(g)) out.max_layer = std::max(out.max_layer, c);

  // Every element starts as its own chain (one unit of flow s -> in -> out -> t).
  // A t -> s flow in the residual network merges chains along cover arcs; the
  // lower bound of 1 on in -> out leaves no residual arc out -> in.
  const int s = 0, t = 1;
  auto in = [](int i) { return 2 + 2 * i; };
  auto out_node = [](int i) { return 3 + 2 * i; };
  FlowNetwork net(2 + 2 * m);
  std::vector<int> end_arc(m), start_arc(m), through_arc(m);
  std::vector<std::vector<std::pair<int, int>>> covers(m);  // (upper element, arc)
  for (int i = 0; i < m; ++i) {
    end_arc[i] = net.add_arc(t, out_node(i), 1);
    start_arc[i] = net.add_arc(in(i), s, 1);
    through_arc[i] = net.add_arc(in(i), out_node(i), FlowNetwork::kInfinity);
  }
  for (int i = 0; i < m; ++i)
    for_each_bit(q[i], [&](int x) {
      int lower = index.at(q[i] & ~bit(x));
      covers[lower].push_back({i, net.add_arc(out_node(lower), in(i), FlowNetwork::kInfinity)});
    });
  long long merged = net.max_flow(t, s);
  out.width = static_cast<int>(m - merged);

  auto reach = net.source_side(t);
  for (int i = 0; i < m; ++i)
    if (reach[out_node(i)] && !reach[in(i)]) out.antichain.push_back(q[i]);

  // Decompose the resulting s -> t flow into paths; each is a chain of the
  // cover graph, and keeping first occurrences makes the chains disjoint.
  std::vector<long long> start(m), through(m), finish(m);
  std::vector<std::vector<long long>> up(m);
  for (int i = 0; i < m; ++i) {
    start[i] = 1 - net.flow_on(start_arc[i]);
    through[i] = 1 + net.flow_on(through_arc[i]);
    finish[i] = 1 - net.flow_on(end_arc[i]);
    for (auto [upper, arc] : covers[i]) up[i].push_back(net.flow_on(arc));
  }
  std::vector<bool> placed(m, false);
  for (int i = 0; i < m; ++i)
    while (start[i] > 0) {
      --start[i];
      std::vector<Mask> chain;
      int v = i;
      while (true) {
        --through[v];
        if (!placed[v]) {
          placed[v] = true;
          chain.push_back(q[v]);
        }
        if (finish[v] > 0) {
          --finish[v];
          break;
        }
        std::size_t e = 0;
        while (up[v][e] == 0) ++e;
        --up[v][e];
        v = covers[v][e].first;
      }
      if (!chain.empty()) out.chains.push_back(std::move(chain));
    }

  bool ok = static_cast<int>(out.antichain.size()) == out.width && static_cast<int>(out.chains.size()) == out.width;
  for (int i = 0; i < m; ++i) ok &= placed[i];
  for (std::size_t a = 0; a < out.antichain.size() && ok; ++a)
    for (std::size_t b = a + 1; b < out.antichain.size() && ok; ++b) {
      Mask x = out.antichain[a], y = out.antichain[b];
      ok = (x & y) != x && (x & y) != y;
    }
  for (const auto& chain : out.chains)
    for (std::size_t a = 0; a + 1 < chain.size() && ok; ++a) ok = (chain[a] & chain[a + 1]) == chain[a];
  if (!ok) throw std::logic_error("antichain and chain partition do not certify the width");
  return out;
}

WidthExperiment random_graph_width(int n, double c, int trials, std::uint64_t seed) {
  WidthExperiment out;
  double sum = 0;
  for (int i = 0; i < trials; ++i) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    Graph g = random_gnp(n, n > 0 ? c / n : 0, rng);
    auto w = width_independence_complex(g);
    WidthTrial tr{w.width, w.max_layer, static_cast<double>(w.width) / static_cast<double>(w.max_layer)};
    out.trials.push_back(tr);
    sum += tr.ratio;
    out.min_ratio = i == 0 ? tr.ratio : std::min(out.min_ratio, tr.ratio);
    out.max_ratio = i == 0 ? tr.ratio : std::max(out.max_ratio, tr.ratio);
  }
  if (trials > 0) out.mean_ratio = sum / trials;
  return out;
}

}  // namespace iml::fam
