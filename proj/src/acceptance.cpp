#include "iml/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "iml/coloring/coloring.hpp"
#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/core/structure.hpp"
#include "iml/cycles/cycles.hpp"
#include "iml/designs/designs.hpp"
#include "iml/families/families.hpp"
#include "iml/gen/generate.hpp"
#include "iml/gl2/gl2.hpp"
#include "iml/perc/perc.hpp"
#include "iml/tournaments/tournaments.hpp"

namespace iml::cli {

Profile profile_from_string(const std::string& s) {
  if (s == "quick") return Profile::kQuick;
  if (s == "full") return Profile::kFull;
  fail(ErrorCode::kBadParams, "profile must be quick or full");
}

std::string to_csv(const Table& t) {
  std::string out;
  auto cell = [&](const std::string& c) {
    if (c.find_first_of(",\"\n\r") == std::string::npos) {
      out += c;
      return;
    }
    out += '"';
    for (char ch : c) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out += '"';
  };
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      cell(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

// RFC 4180: quoted cells may hold commas, doubled quotes and line breaks.
Table table_from_csv(const std::string& name, const std::string& text) {
  Table t;
  t.name = name;
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string cell;
  bool quoted = false, any = false;
  auto end_record = [&] {
    if (any || !cell.empty() || !rec.empty()) {
      rec.push_back(cell);
      records.push_back(rec);
    }
    rec.clear();
    cell.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c != '"') cell += c;
      else if (i + 1 < text.size() && text[i + 1] == '"') cell += text[++i];
      else quoted = false;
    } else if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      rec.push_back(cell);
      cell.clear();
      any = true;
    } else if (c == '\n') {
      end_record();
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) fail(ErrorCode::kParse, "unterminated quote in " + name);
  end_record();
  if (!records.empty()) {
    t.header = records.front();
    t.rows.assign(records.begin() + 1, records.end());
  }
  return t;
}

namespace {

std::string str(long long x) { return std::to_string(x); }
std::string str(const BigInt& x) { return x.str(); }
std::string str(const Rational& x) { return x.str(); }
std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Largest k-intersecting family of subsets of [n].
long long katona_bound(int n, int k) {
  long long s = 0;
  if ((n + k) % 2 == 0) {
    for (int j = (n + k) / 2; j <= n; ++j) s += binom(n, j);
  } else {
    int t = (n + k + 1) / 2;
    for (int j = t; j <= n; ++j) s += binom(n, j);
    s += binom(n - 1, t - 1);
  }
  return s;
}

// Largest k-intersecting antichain.
long long milner_bound(int n, int k) { return binom(n, (n + k + 1) / 2); }

struct Out {
  CriterionResult& r;
  // Criteria hold references to several tables at once, so growth must not
  // reallocate.
  Table& add(const std::string& name, std::vector<std::string> header) {
    if (r.tables.capacity() < 8) r.tables.reserve(8);
    r.tables.push_back({name, std::move(header), {}});
    return r.tables.back();
  }
};

void half_cycles(CriterionResult& r, Profile p) {
  Out o{r};
  auto& t = o.add("half_cycles", {"n", "max_half_cycles", "witnesses"});
  const std::vector<long long> expected = {0, 2, 6, 12, 20, 20, 48, 48, 132};
  const int top = p == Profile::kFull ? 20 : 16;
  int mismatches = 0;
  for (int n = 4; n <= top; n += 2) {
    auto m = cycles::max_half_cycles(n);
    t.rows.push_back({str(n), str(m.max_count), str(static_cast<long long>(m.witnesses.size()))});
    if (m.max_count != expected[(n - 4) / 2]) ++mismatches;
  }
  r.pass = mismatches == 0;
  r.summary = "n = 4.." + std::to_string(top) + ": " + std::to_string(mismatches) + " mismatches against 0,2,6,12,20,20,48" +
              (top > 16 ? ",48,132" : "");
}

void smith(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("smith_parity", {"n", "cubic_graphs", "edges_checked", "odd_edges"});
  long long total_odd = 0, graphs = 0;
  for (int n = 4; n <= 14; n += 2) {
    long long count = 0, edges = 0, odd = 0;
    for (const auto& g : gen::cubic_graphs(n)) {
      auto rep = cycles::smith_parity_check(g);
      ++count;
      edges += static_cast<long long>(rep.edges.size());
      odd += static_cast<long long>(rep.odd_edges.size());
    }
    t.rows.push_back({str(n), str(count), str(edges), str(odd)});
    total_odd += odd;
    graphs += count;
  }
  r.pass = total_odd == 0;
  r.summary = std::to_string(graphs) + " cubic graphs, " + std::to_string(total_odd) + " edges with an odd count";
}

void bipartite_cubic(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("bipartite_cubic", {"n", "connected_bipartite_cubic", "odd_totals"});
  long long bad = 0, graphs = 0;
  for (int n = 4; n <= 14; n += 2) {
    long long count = 0, odd = 0;
    for (const auto& g : gen::connected_cubic_graphs(n)) {
      if (!is_bipartite(g)) continue;
      ++count;
      if (cycles::count_ham_cycles(g) % 2 != 0) ++odd;
    }
    t.rows.push_back({str(n), str(count), str(odd)});
    bad += odd;
    graphs += count;
  }
  r.pass = bad == 0;
  r.summary = std::to_string(graphs) + " connected bipartite cubic graphs, " + std::to_string(bad) + " with an odd total";
}

void kelly(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("kelly", {"n", "regular_tournaments", "decomposed"});
  bool ok = true;
  for (int n : {3, 5, 7}) {
    gen::GenSpec s;
    s.n = n;
    s.kind = gen::GraphClass::kRegularTournament;
    long long count = 0, done = 0;
    for (const auto& d : gen::generate_tournaments(s)) {
      ++count;
      auto dec = tour::kelly_decomposition(d);
      if (dec && tour::verify_kelly(d, *dec)) ++done;
    }
    t.rows.push_back({str(n), str(count), str(done)});
    ok = ok && count == done && count > 0;
  }
  r.pass = ok;
  r.summary = ok ? "every regular tournament on 3, 5, 7 vertices decomposed and replayed" : "a decomposition failed";
}

void two_strong(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("two_arc_strong", {"n", "two_arc_strong_tournaments", "decomposed"});
  long long fails = 0, total = 0;
  for (int n = 3; n <= 8; ++n) {
    gen::GenSpec s;
    s.n = n;
    s.kind = gen::GraphClass::kTournament;
    long long count = 0, done = 0;
    for (const auto& d : gen::generate_tournaments(s)) {
      if (!tour::is_k_arc_strong(d, 2)) continue;
      ++count;
      auto dec = tour::decompose_arc_disjoint_strong(d, 2);
      if (dec && tour::verify_decomposition(d, *dec)) ++done;
    }
    t.rows.push_back({str(n), str(count), str(done)});
    fails += count - done;
    total += count;
  }
  r.pass = fails == 0;
  r.summary = std::to_string(total) + " 2-arc-strong tournaments, " + std::to_string(fails) + " failures";
}

void families(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("intersecting_families",
                  {"n", "k", "katona_bound", "max_intersecting", "milner_bound", "max_intersecting_antichain",
                   "max_diameter_family", "max_diameter_antichain"});
  int mismatches = 0, question_fails = 0, kleitman_fails = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      int inter = fam::max_family(n, {k, false, -1}).size;
      int anti = fam::max_family(n, {k, true, -1}).size;
      int diam = fam::max_family(n, {0, false, n - k}).size;
      int diam_anti = fam::max_family(n, {0, true, n - k}).size;
      if (inter != katona_bound(n, k) || anti != milner_bound(n, k)) ++mismatches;
      if (diam > katona_bound(n, k)) ++kleitman_fails;
      if (diam_anti > milner_bound(n, k)) ++question_fails;
      t.rows.push_back({str(n), str(k), str(katona_bound(n, k)), str(inter), str(milner_bound(n, k)), str(anti), str(diam),
                        str(diam_anti)});
    }
  r.pass = mismatches == 0;
  r.summary = std::to_string(mismatches) + " mismatches against the closed forms; diameter variant: " +
              std::to_string(kleitman_fails) + " families and " + std::to_string(question_fails) +
              " antichains above the bounds";
}

void independence_width(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("independence_width", {"graph", "n", "width", "max_layer"});
  int bad = 0;
  auto row = [&](const std::string& name, int n, const Graph& g) {
    auto w = fam::width_independence_complex(g);
    t.rows.push_back({name, str(n), str(w.width), str(w.max_layer)});
    if (w.width != w.max_layer || static_cast<int>(w.antichain.size()) != w.width ||
        static_cast<int>(w.chains.size()) != w.width)
      ++bad;
  };
  for (int n = 1; n <= 20; ++n) row("path", n, graphs::path(n));
  for (int n = 3; n <= 20; ++n) row("cycle", n, graphs::cycle(n));
  r.pass = bad == 0;
  r.summary = std::to_string(bad) + " of 38 paths and cycles with width different from the largest layer";
}

void gl2_criterion(CriterionResult& r, Profile p) {
  Out o{r};
  auto& d = o.add("gl2_diameters", {"n", "diameter", "extremal_count", "elements"});
  bool ok = true;
  const int top = p == Profile::kFull ? 5 : 4;
  for (int n = 2; n <= top; ++n) {
    auto diam = gl2::diameter(n);
    long long elements = 0;
    for (long long x : diam.layers) elements += x;
    d.rows.push_back({str(n), str(diam.diameter), str(diam.extremal_count), str(elements)});
  }
  auto& g = o.add("gl2_greedy", {"n", "samples", "replayed", "mean_ops", "mean_over_n2_log2n"});
  long long below_exact = 0;
  for (int n = 4; n <= 256; n *= 2) {
    auto rng = trial_rng(88, static_cast<std::uint64_t>(n));
    long long replayed = 0, total = 0;
    const int samples = 1000;
    for (int i = 0; i < samples; ++i) {
      auto m = gl2::random_invertible(n, rng);
      auto red = gl2::greedy_reduce(m);
      replayed += gl2::replay_reduces(m, red.ops);
      total += red.count;
      if (n <= 4 && red.count < gl2::distance(m).distance) ++below_exact;
    }
    double mean = static_cast<double>(total) / samples;
    g.rows.push_back({str(n), str(samples), str(replayed), fixed(mean, 2), fixed(mean / (n * n / std::log2(n)), 3)});
    ok = ok && replayed == samples;
  }
  ok = ok && below_exact == 0;
  r.pass = ok;
  r.summary = "diameters to n = " + std::to_string(top) + "; greedy replay " + (ok ? "clean" : "FAILED") + ", " +
              std::to_string(below_exact) + " samples below the exact distance";
}

void magic(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("magic_matrices", {"n", "k", "magic", "positive", "positive_fraction"});
  bool counts_ok = true, p2_ok = true, monotone = true, ehrhart_ok = true;
  for (int n = 1; n <= 4; ++n) {
    Rational prev = -1;
    for (int k = 0; k <= 20; ++k) {
      BigInt all = des::count_magic(n, k), pos = des::count_positive_magic(n, k);
      Rational frac = des::positive_fraction(n, k);
      if (frac != Rational(pos, all)) counts_ok = false;
      if (n == 2 && k >= 1 && frac != Rational(k - 1, k + 1)) p2_ok = false;
      if (frac < prev) monotone = false;
      prev = frac;
      t.rows.push_back({str(n), str(k), str(all), str(pos), str(frac)});
    }
    auto e = des::ehrhart_check(n, 20);
    if (!e.polynomial_matches || !e.reciprocity) ehrhart_ok = false;
  }
  r.pass = counts_ok && p2_ok && monotone && ehrhart_ok;
  r.summary = std::string("P(2,k) = (k-1)/(k+1): ") + (p2_ok ? "yes" : "NO") + "; reciprocity: " +
              (ehrhart_ok ? "yes" : "NO") + "; monotone in k: " + (monotone ? "yes" : "NO");
}

void percolation(CriterionResult& r, Profile) {
  Out o{r};
  auto& s = o.add("percolation_half", {"side", "p_half", "reference"});
  auto& c = o.add("percolation_curve", {"side", "p", "successes", "trials"});
  const auto points = perc::linear_grid(0.01, 0.15, 57);
  const long long trials = 2000;
  const std::uint64_t seed = 2024;
  bool monotone = true, decreasing = true, replay = true;
  double prev = 2;
  perc::SweepResult first;
  for (int side : {32, 64, 128}) {
    auto sweep = perc::threshold_sweep(perc::grid(side), points, perc::Rule::threshold(2), trials, seed);
    if (side == 32) first = sweep;
    for (std::size_t j = 0; j < sweep.points.size(); ++j) {
      const auto& e = sweep.points[j];
      if (j > 0 && e.estimate < sweep.points[j - 1].ci_lo) monotone = false;
      c.rows.push_back({str(side), fixed(e.p, 4), str(e.successes), str(e.trials)});
    }
    double half = sweep.p_half.value_or(2);
    if (!sweep.p_half || half >= prev) decreasing = false;
    prev = half;
    s.rows.push_back({str(side), sweep.p_half ? fixed(half, 6) : "none", fixed(perc::holroyd_reference(side), 6)});
  }
  auto again = perc::threshold_sweep(perc::grid(32), points, perc::Rule::threshold(2), trials, seed);
  for (std::size_t j = 0; j < points.size(); ++j)
    if (again.points[j].successes != first.points[j].successes) replay = false;
  replay = replay && again.p_half == first.p_half;
  r.pass = monotone && decreasing && replay;
  r.summary = std::string("monotone: ") + (monotone ? "yes" : "NO") + ", p_half decreasing: " +
              (decreasing ? "yes" : "NO") + ", replay: " + (replay ? "identical" : "DIFFERS");
}

void cycle_space(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("cycle_space", {"n", "connected", "gf2_violations", "three_edge_connected", "gf3_violations"});
  long long bad = 0;
  for (int n = 2; n <= 8; ++n) {
    gen::GenSpec s;
    s.n = n;
    s.connectivity = 1;
    long long conn = 0, b2 = 0, tec = 0, b3 = 0;
    for (const auto& g : gen::generate_graphs(s)) {
      ++conn;
      if (cycles::cycle_space_dimension(g, 2) != g.size() - n + 1) ++b2;
      if (edge_connectivity(g) >= 3) {
        ++tec;
        if (cycles::cycle_space_dimension(g, 3) != g.size()) ++b3;
      }
    }
    t.rows.push_back({str(n), str(conn), str(b2), str(tec), str(b3)});
    bad += b2 + b3;
  }
  r.pass = bad == 0;
  r.summary = std::to_string(bad) + " violations over connected graphs up to 8 vertices";
}

void strong_chromatic(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("strong_chromatic", {"n", "graphs", "bound_violations", "above_biclique_plus_one"});
  long long violations = 0, gap = 0;
  for (int n = 2; n <= 7; ++n) {
    gen::GenSpec s;
    s.n = n;
    long long count = 0, v = 0, above = 0;
    for (const auto& g : gen::generate_graphs(s)) {
      if (g.size() == 0) continue;
      ++count;
      int sc = color::strong_chromatic_number(g), wb = biclique_number(g);
      if (wb > sc || sc > 3 * g.max_degree() - 1) ++v;
      if (sc > wb + 1) ++above;
    }
    t.rows.push_back({str(n), str(count), str(v), str(above)});
    violations += v;
    gap += above;
  }
  r.pass = violations == 0;
  r.summary = std::to_string(violations) + " bound violations; " + std::to_string(gap) + " graphs with s > biclique + 1" +
              (gap ? "  *** COUNTEREXAMPLE CANDIDATES, inspect the table ***" : "");
}

void latin(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("latin_avoidance", {"n", "mode", "arrays", "classes", "unavoidable"});
  long long bad = 0;
  for (int n = 2; n <= 4; ++n) {
    auto s = des::avoidance_scan_exhaustive(n);
    t.rows.push_back({str(n), "exhaustive", str(s.arrays), str(s.classes), str(s.counterexample ? 1 : 0)});
    bad += s.counterexample.has_value();
  }
  auto s = des::avoidance_scan_random(5, 1000000, 2024);
  t.rows.push_back({"5", "random", str(s.arrays), "", str(s.counterexample ? 1 : 0)});
  bad += s.counterexample.has_value();
  r.pass = bad == 0;
  r.summary = std::to_string(bad) + " unavoidable arrays";
}

void properties(CriterionResult& r, Profile) {
  Out o{r};
  auto& t = o.add("property_suites", {"property", "cases", "failures"});
  auto suite = [&](const std::string& name, int cases, const std::function<bool(int)>& check) {
    long long failures = 0;
    for (int i = 0; i < cases; ++i) failures += !check(i);
    t.rows.push_back({name, str(cases), str(failures)});
    return failures;
  };
  long long bad = 0;
  bad += suite("dilworth_duality", 60, [](int i) {
    auto rng = trial_rng(141, static_cast<std::uint64_t>(i));
    Graph g = random_gnp(4 + i % 9, 0.3, rng);
    auto w = fam::width_independence_complex(g);
    if (static_cast<int>(w.antichain.size()) != w.width || static_cast<int>(w.chains.size()) != w.width) return false;
    for (std::size_t a = 0; a < w.antichain.size(); ++a)
      for (std::size_t b = a + 1; b < w.antichain.size(); ++b) {
        Mask x = w.antichain[a], y = w.antichain[b];
        if ((x & y) == x || (x & y) == y) return false;
      }
    std::vector<Mask> covered;
    for (const auto& chain : w.chains) {
      for (std::size_t j = 0; j + 1 < chain.size(); ++j)
        if ((chain[j] & chain[j + 1]) != chain[j] || chain[j] == chain[j + 1]) return false;
      covered.insert(covered.end(), chain.begin(), chain.end());
    }
    std::sort(covered.begin(), covered.end());
    auto all = fam::independence_complex(g);
    std::sort(all.begin(), all.end());
    return covered == all;
  });
  bad += suite("percolation_monotone_idempotent", 100, [](int i) {
    auto rng = trial_rng(142, static_cast<std::uint64_t>(i));
    auto g = i % 2 ? perc::grid(12) : perc::random_regular(60, 4, static_cast<std::uint64_t>(i));
    auto rule = i % 3 ? perc::Rule::threshold(2) : perc::Rule::strict_majority();
    std::bernoulli_distribution coin(0.12), extra(0.1);
    std::vector<char> a(g.size()), b(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      a[v] = coin(rng);
      b[v] = a[v] || extra(rng);
    }
    auto ca = perc::percolate(g, rule, a), cb = perc::percolate(g, rule, b);
    for (std::size_t v = 0; v < g.size(); ++v)
      if (ca.infected[v] > cb.infected[v]) return false;
    auto again = perc::percolate(g, rule, ca.infected);
    return again.infected == ca.infected && again.rounds == 0;
  });
  bad += suite("colouring_replay", 100, [](int i) {
    auto rng = trial_rng(143, static_cast<std::uint64_t>(i));
    Graph g = random_gnp(5 + i % 8, 0.4, rng);
    int chi = color::chromatic_number(g);
    auto c = color::k_colouring(g, chi);
    if (!c || !color::is_proper(g, *c)) return false;
    if (chi > 1 && color::k_colouring(g, chi - 1)) return false;
    auto eq = color::equitable_coloring(g, g.max_degree() + 1);
    return color::is_proper(g, eq.colouring) && color::is_equitable(g, eq.colouring);
  });
  bad += suite("gl2_inverse_distance", 300, [](int i) {
    auto rng = trial_rng(144, static_cast<std::uint64_t>(i));
    auto m = gl2::random_invertible(2 + i % 3, rng);
    return gl2::distance(m).distance == gl2::distance(m.inverse()).distance;
  });
  bad += suite("arrowing_monotone", 40, [](int i) {
    auto rng = trial_rng(145, static_cast<std::uint64_t>(i));
    Graph f = random_gnp(6 + i % 2, 0.5, rng);
    Graph pattern = i % 2 ? graphs::complete(3) : graphs::path(3);
    std::vector<Edge> missing;
    for (int u = 0; u < f.order(); ++u)
      for (int v = u + 1; v < f.order(); ++v)
        if (!f.has_edge(u, v)) missing.push_back({u, v});
    if (missing.empty()) return true;
    Graph bigger = f;
    auto [u, v] = missing[rng() % missing.size()];
    bigger.add_edge(u, v);
    return !color::arrows_vertex(f, pattern, 2) || color::arrows_vertex(bigger, pattern, 2);
  });
  r.pass = bad == 0;
  r.summary = std::to_string(bad) + " failures across 5 property suites";
}

struct Entry {
  const char* title;
  void (*run)(CriterionResult&, Profile);
};
const Entry kEntries[kCriteria] = {
    {"half-cycle maxima of connected cubic graphs", half_cycles},
    {"Hamilton cycles through each edge of a cubic graph are even", smith},
    {"bipartite cubic graphs have an even number of Hamilton cycles", bipartite_cubic},
    {"regular tournaments decompose into Hamilton cycles", kelly},
    {"2-arc-strong tournaments split into two arc-disjoint strong subdigraphs", two_strong},
    {"k-intersecting families and antichains", families},
    {"independence-complex width of paths and cycles", independence_width},
    {"GL(n,2) diameters and greedy reduction", gl2_criterion},
    {"magic matrices and Ehrhart reciprocity", magic},
    {"2-neighbour bootstrap percolation on grids", percolation},
    {"cycle space dimension over GF(2) and GF(3)", cycle_space},
    {"strong chromatic number against biclique number", strong_chromatic},
    {"Latin squares avoiding arrays", latin},
    {"property suites", properties},
};

}  // namespace

CriterionResult run_criterion(int number, Profile profile) {
  if (number < 1 || number > kCriteria) fail(ErrorCode::kBadParams, "criterion number out of range");
  CriterionResult r;
  r.number = number;
  r.title = kEntries[number - 1].title;
  auto start = std::chrono::steady_clock::now();
  try {
    kEntries[number - 1].run(r, profile);
  } catch (const Error& e) {
    r.pass = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace iml::cli
