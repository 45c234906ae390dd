#include "iml/gen/canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "iml/core/error.hpp"
#include "iml/core/io.hpp"

namespace iml::gen {

namespace {

using Cells = std::vector<Mask>;
using Trace = std::vector<int>;
using Code = std::vector<Mask>;

constexpr int kNoJump = INT_MAX;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  Search(const std::vector<Mask>& out, const std::vector<Mask>& in, bool directed)
      : out_(out), in_(in), directed_(directed), n_(static_cast<int>(out.size())) {}

  CanonicalForm run(Cells cells) {
    Trace trace;
    refine(cells, cells, trace);
    traces_.push_back(trace);
    std::vector<int> prefix;
    visit(cells, prefix);

    CanonicalForm cf;
    cf.aut_order = aut_order_;
    cf.generators = gens_;
    cf.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) cf.labeling[best_lab_[i]] = i;
    UnionFind uf(n_);
    for (const auto& g : gens_)
      for (int v = 0; v < n_; ++v) uf.unite(v, g[v]);
    cf.orbits.resize(n_);
    for (int v = 0; v < n_; ++v) cf.orbits[v] = uf.find(v);
    best_code_out_ = best_code_;
    return cf;
  }

  const Code& best_code() const { return best_code_out_; }

 private:
  // Splits cells by neighbour counts into each splitter until equitable.
  void refine(Cells& cells, std::vector<Mask> queue, Trace& trace) const {
    std::vector<std::pair<int, int>> keyed;
    for (std::size_t qi = 0; qi < queue.size() && static_cast<int>(cells.size()) < n_; ++qi) {
      Mask w = queue[qi];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        Mask x = cells[i];
        if (popcount(x) == 1) continue;
        keyed.clear();
        for_each_bit(x, [&](int v) {
          int key = popcount(out_[v] & w);
          if (directed_) key = key * 65 + popcount(in_[v] & w);
          keyed.emplace_back(key, v);
        });
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells frags;
        trace.push_back(static_cast<int>(i));
        for (std::size_t j = 0; j < keyed.size();) {
          Mask frag = 0;
          std::size_t k = j;
          while (k < keyed.size() && keyed[k].first == keyed[j].first) frag |= bit(keyed[k++].second);
          trace.push_back(keyed[j].first);
          trace.push_back(static_cast<int>(k - j));
          frags.push_back(frag);
          j = k;
        }
        cells.erase(cells.begin() + static_cast<long>(i));
        cells.insert(cells.begin() + static_cast<long>(i), frags.begin(), frags.end());
        queue.insert(queue.end(), frags.begin(), frags.end());
        i += frags.size() - 1;
      }
    }
    trace.push_back(-1);
    trace.push_back(static_cast<int>(cells.size()));
  }

  // Orbits of the subgroup generated by automorphisms fixing `prefix` pointwise.
  UnionFind stabilizer_orbits(const std::vector<int>& prefix) const {
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, g[v]);
    }
    return uf;
  }

  int compare_to_best(std::size_t depth) const {
    for (std::size_t d = 0; d <= depth; ++d) {
      if (d >= best_traces_.size()) return 1;
      if (traces_[d] != best_traces_[d]) return traces_[d] < best_traces_[d] ? -1 : 1;
    }
    return 0;
  }

  bool on_first_path(const std::vector<int>& prefix) const {
    return prefix.size() <= first_path_.size() && std::equal(prefix.begin(), prefix.end(), first_path_.begin());
  }

  void add_generator(std::vector<int> g) {
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity &= g[v] == v;
    if (!identity && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }

  int leaf(const Cells& cells, const std::vector<int>& prefix, bool eq_first, int cmp_best) {
    std::vector<int> lab(n_), pos(n_);
    for (int i = 0; i < n_; ++i) {
      lab[i] = lowest_bit(cells[i]);
      pos[lab[i]] = i;
    }
    Code code(n_, 0);
    for (int i = 0; i < n_; ++i) for_each_bit(out_[lab[i]], [&](int u) { code[i] |= bit(pos[u]); });

    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_traces_ = best_traces_ = traces_;
      first_path_ = prefix;
      return kNoJump;
    }
    if (eq_first && code == first_code_) {
      std::vector<int> g(n_);
      for (int i = 0; i < n_; ++i) g[first_lab_[i]] = lab[i];
      add_generator(std::move(g));
      int level = 0;
      while (prefix[level] == first_path_[level]) ++level;
      return level;
    }
    if (cmp_best == 0 && code == best_code_) {
      std::vector<int> g(n_);
      for (int i = 0; i < n_; ++i) g[best_lab_[i]] = lab[i];
      add_generator(std::move(g));
      return kNoJump;
    }
    if (cmp_best > 0 || (cmp_best == 0 && code > best_code_)) {
      best_lab_ = lab;
      best_code_ = code;
      best_traces_ = traces_;
    }
    return kNoJump;
  }

  int visit(const Cells& cells, std::vector<int>& prefix) {
    std::size_t depth = prefix.size();
    bool eq_first = !have_first_ || (depth < first_traces_.size() && traces_[depth] == first_traces_[depth] &&
                                     std::equal(traces_.begin(), traces_.begin() + static_cast<long>(depth),
                                                first_traces_.begin()));
    int cmp_best = have_first_ ? compare_to_best(depth) : 0;
    if (have_first_ && !eq_first && cmp_best < 0) return kNoJump;
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, prefix, eq_first, cmp_best);

    std::size_t target = 0;
    while (popcount(cells[target]) == 1) ++target;
    Mask cell = cells[target];
    std::vector<int> explored;
    std::size_t gens_seen = SIZE_MAX;
    UnionFind orbits(n_);
    int first_child = -1;
    for (int w : bits_of(cell)) {
      if (gens_seen != gens_.size()) {
        orbits = stabilizer_orbits(prefix);
        gens_seen = gens_.size();
      }
      bool redundant = std::any_of(explored.begin(), explored.end(),
                                   [&](int e) { return orbits.find(e) == orbits.find(w); });
      if (redundant) continue;
      explored.push_back(w);
      if (first_child < 0) first_child = w;

      Cells child = cells;
      child[target] = bit(w);
      child.insert(child.begin() + static_cast<long>(target) + 1, cell & ~bit(w));
      Trace trace;
      refine(child, {bit(w)}, trace);
      prefix.push_back(w);
      traces_.push_back(std::move(trace));
      int jump = visit(child, prefix);
      traces_.pop_back();
      prefix.pop_back();
      if (jump < static_cast<int>(depth)) return jump;
    }
    if (on_first_path(prefix) && depth < first_path_.size()) {
      UnionFind uf = stabilizer_orbits(prefix);
      int root = uf.find(first_path_[depth]);
      int size = 0;
      for_each_bit(cell, [&](int v) { size += uf.find(v) == root; });
      aut_order_ *= size;
    }
    return kNoJump;
  }

  const std::vector<Mask>& out_;
  const std::vector<Mask>& in_;
  bool directed_;
  int n_;

  std::vector<Trace> traces_;  // traces along the current path
  bool have_first_ = false;
  std::vector<int> first_path_, first_lab_, best_lab_;
  Code first_code_, best_code_, best_code_out_;
  std::vector<Trace> first_traces_, best_traces_;
  std::vector<std::vector<int>> gens_;
  BigInt aut_order_ = 1;
};

}  // namespace

CanonicalForm canonical_form_rows(const std::vector<Mask>& out, const std::vector<Mask>& in,
                                  const std::vector<Mask>& colours, bool directed) {
  int n = static_cast<int>(out.size());
  if (n > 64) fail(ErrorCode::kTooLarge, "canonical labeling supports at most 64 vertices");
  CanonicalForm cf;
  if (n == 0) {
    cf.certificate = directed ? io::to_digraph6(Digraph(0)) : io::to_graph6(Graph(0));
    return cf;
  }
  Cells cells;
  Mask covered = 0;
  for (Mask c : colours)
    if (c) {
      cells.push_back(c);
      covered |= c;
    }
  if (covered != low_mask(n)) fail(ErrorCode::kInvalidArgument, "colour classes must cover all vertices");
  Search search(out, in, directed);
  cf = search.run(cells);
  const Code& code = search.best_code();
  if (directed) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) for_each_bit(code[i], [&](int j) { d.add_arc(i, j); });
    cf.certificate = io::to_digraph6(d);
  } else {
    Graph g(n);
    for (int i = 0; i < n; ++i) for_each_bit(code[i] & ~low_mask(i + 1), [&](int j) { g.add_edge(i, j); });
    cf.certificate = io::to_graph6(g);
  }
  if (colours.size() > 1) {
    cf.certificate += '|';
    for (Mask c : colours) cf.certificate += std::to_string(popcount(c)) + ',';
  }
  return cf;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(g, {g.all()}); }

CanonicalForm canonical_form(const Graph& g, const std::vector<Mask>& colours) {
  if (!g.small()) fail(ErrorCode::kTooLarge, "canonical labeling supports at most 64 vertices");
  std::vector<Mask> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  return canonical_form_rows(rows, rows, colours, false);
}

CanonicalForm canonical_form(const Digraph& d) {
  std::vector<Mask> out(d.order()), in(d.order());
  for (int v = 0; v < d.order(); ++v) {
    out[v] = d.out(v);
    in[v] = d.in(v);
  }
  return canonical_form_rows(out, in, {d.all()}, true);
}

}  // namespace iml::gen
