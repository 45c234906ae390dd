#include "verbs.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "iml/cli/registry.hpp"
#include "iml/core/error.hpp"
#include "iml/core/io.hpp"
#include "iml/cycles/cycles.hpp"
#include "iml/gen/generate.hpp"
#include "iml/gl2/gl2.hpp"
#include "iml/perc/perc.hpp"
#include "iml/tournaments/tournaments.hpp"

namespace iml::tools {

namespace {

using json = nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kBadParams, std::string(what) + " is not valid JSON: " + e.what());
  }
}

// digraph6 from the option, or one per line on stdin when it is empty.
std::vector<Digraph> read_digraphs(const std::string& text) {
  std::vector<std::string> lines;
  if (!text.empty()) lines.push_back(text);
  else
    for (std::string line; std::getline(std::cin, line);)
      if (!line.empty()) lines.push_back(line);
  std::vector<Digraph> out;
  for (const auto& l : lines) out.push_back(io::from_digraph6(l));
  return out;
}

json arcs_json(const std::vector<tour::Arc>& arcs) {
  json a = json::array();
  for (auto [u, v] : arcs) a.push_back({u, v});
  return a;
}

json ops_json(const std::vector<gl2::RowOp>& ops) {
  json a = json::array();
  for (auto [i, j] : ops) a.push_back({i, j});
  return a;
}

// First Hamilton cycle of g found by the cycle enumerator, if any.
std::optional<std::vector<int>> some_hamilton_cycle(const Graph& g) {
  std::optional<std::vector<int>> found;
  cycles::for_each_cycle(
      g,
      [&](const std::vector<int>& c) {
        if (static_cast<int>(c.size()) != g.order()) return true;
        found = c;
        return false;
      },
      g.order());
  return found;
}

// The walk wants the cycle to start x, y.
std::vector<int> rotate_to_edge(std::vector<int> c, Edge e) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    if (c[i] == e.first) {
      std::rotate(c.begin(), c.begin() + i, c.end());
      if (c[1] != e.second) std::reverse(c.begin() + 1, c.end());
      return c;
    }
  return c;
}

void add_gen(CLI::App& app, std::function<int()>& action) {
  auto* gen = app.add_subcommand("gen", "graph6 / digraph6 lines for a generation spec");
  auto spec = std::make_shared<std::string>();
  gen->add_option("--spec", *spec, R"(JSON, e.g. {"n":8,"class":"cubic","connectivity":2})")->required();
  gen->callback([&action, spec] {
    action = [spec] {
      for (const auto& line : gen::generate_lines(gen::spec_from_json(parse_json(*spec, "--spec"))))
        std::cout << line << '\n';
      return 0;
    };
  });
}

void add_cycles(CLI::App& app, std::function<int()>& action) {
  auto* cyc = app.add_subcommand("cycles", "cycle counts on cubic graphs, CSV rows (n, graph6, value)");
  cyc->require_subcommand(1);
  auto n = std::make_shared<int>(10);
  auto profile = std::make_shared<std::string>("quick");

  auto* half = cyc->add_subcommand("half-cycles", "maximum n/2-cycle count and its witnesses");
  half->add_option("--n", *n, "even order")->required();
  half->callback([&action, n] {
    action = [n] {
      auto m = cycles::max_half_cycles(*n);
      std::cout << "n,graph6,half_cycles\n";
      for (const auto& g : m.witnesses) std::cout << *n << ',' << io::to_graph6(g) << ',' << m.max_count.str() << '\n';
      return 0;
    };
  });

  auto* smith = cyc->add_subcommand("smith", "edges with an odd number of Hamilton cycles, per cubic graph");
  smith->add_option("--n", *n, "even order")->required();
  smith->callback([&action, n] {
    action = [n] {
      std::cout << "n,graph6,odd_edges\n";
      for (const auto& g : gen::cubic_graphs(*n))
        std::cout << *n << ',' << io::to_graph6(g) << ',' << cycles::smith_parity_check(g).odd_edges.size() << '\n';
      return 0;
    };
  });

  auto* lolli = cyc->add_subcommand("lollipop", "length of the rotation walk to a second Hamilton cycle");
  lolli->add_option("--n", *n, "even order")->required();
  lolli->add_option("--profile", *profile, "quick: first edge of each graph; full: every edge")
      ->check(CLI::IsMember({"quick", "full"}));
  lolli->callback([&action, n, profile] {
    action = [n, profile] {
      std::cout << "n,graph6,steps\n";
      for (const auto& g : gen::connected_cubic_graphs(*n)) {
        auto c = some_hamilton_cycle(g);
        if (!c) continue;
        long long worst = 0;
        const int len = static_cast<int>(c->size());
        for (int i = 0; i < (*profile == "full" ? len : 1); ++i) {
          Edge e{(*c)[i], (*c)[(i + 1) % len]};
          worst = std::max(worst, cycles::lollipop_walk(g, rotate_to_edge(*c, e), e).steps);
        }
        std::cout << *n << ',' << io::to_graph6(g) << ',' << worst << '\n';
      }
      return 0;
    };
  });
}

void add_tour(CLI::App& app, std::function<int()>& action) {
  auto* tour = app.add_subcommand("tour", "tournament solvers; digraph6 in, JSON witnesses out");
  tour->require_subcommand(1);
  auto d6 = std::make_shared<std::string>();
  auto k = std::make_shared<int>(2);
  auto target = std::make_shared<std::string>("degree");

  auto each = [d6](const std::function<json(const Digraph&)>& f) {
    return [d6, f] {
      for (const auto& d : read_digraphs(*d6)) {
        json j = f(d);
        j["digraph6"] = io::to_digraph6(d);
        std::cout << j.dump() << '\n';
      }
      return 0;
    };
  };
  auto verb = [&](const char* name, const char* help, bool takes_k) {
    auto* s = tour->add_subcommand(name, help);
    s->add_option("--d6", *d6, "digraph6; read lines from stdin when absent");
    if (takes_k) s->add_option("--k", *k, "k");
    return s;
  };

  verb("decompose", "k arc-disjoint strong spanning subdigraphs", true)->callback([&action, each, k] {
    action = each([k](const Digraph& d) {
      auto dec = tour::decompose_arc_disjoint_strong(d, *k);
      json classes = json::array();
      if (dec)
        for (const auto& c : dec->classes) classes.push_back(arcs_json(c));
      return json{{"k", *k}, {"found", dec.has_value()}, {"classes", dec ? classes : json()}};
    });
  });
  verb("kelly", "decomposition of a regular tournament into Hamilton cycles", false)->callback([&action, each] {
    action = each([](const Digraph& d) {
      auto cyc = tour::kelly_decomposition(d);
      return json{{"found", cyc.has_value()}, {"cycles", cyc ? json(*cyc) : json()},
                  {"verified", cyc && tour::verify_kelly(d, *cyc)}};
    });
  });
  verb("cycles", "k vertex-disjoint directed cycles", true)->callback([&action, each, k] {
    action = each([k](const Digraph& d) {
      auto cyc = tour::disjoint_cycles(d, *k);
      return json{{"k", *k}, {"found", cyc.has_value()}, {"cycles", cyc ? json(*cyc) : json()}};
    });
  });
  verb("alpha-beta", "fewest arcs of a spanning subdigraph with semi-degree >= k, and of a k-arc-strong one", true)
      ->callback([&action, each, k] {
        action = each([k](const Digraph& d) {
          auto a = tour::alpha_k(d, *k);
          json beta;
          if (tour::is_k_arc_strong(d, *k)) {
            auto b = tour::beta_k(d, *k);
            beta = {{"arcs", b.arcs}, {"subdigraph", io::to_digraph6(b.subdigraph)}};
          }
          return json{{"k", *k},
                      {"alpha", a ? json{{"arcs", a->arcs}, {"subdigraph", io::to_digraph6(a->subdigraph)}} : json()},
                      {"beta", beta}};
        });
      });
  auto* rev = verb("reverse", "fewest arc reversals reaching semi-degree >= k or k-arc-strong", true);
  rev->add_option("--target", *target, "degree | arc-strong")->check(CLI::IsMember({"degree", "arc-strong"}));
  rev->callback([&action, each, k, target] {
    action = each([k, target](const Digraph& d) {
      auto r = *target == "degree" ? tour::reversal_deg(d, *k) : tour::reversal_arc_strong(d, *k);
      return json{{"k", *k}, {"target", *target}, {"achieved", r.achieved}, {"reversals", r.reversed.size()},
                  {"reversed", arcs_json(r.reversed)}, {"result", io::to_digraph6(r.result)}};
    });
  });
}

// color, fam, ext and des run the registry entries of their topic: the verb is
// the id without its prefix.
void add_registry_group(CLI::App& app, std::function<int()>& action, const std::string& name, const std::string& prefix,
                        const std::string& help) {
  auto* group = app.add_subcommand(name, help);
  group->require_subcommand(1);
  for (const auto* e : cli::list_problems(prefix)) {
    auto* s = group->add_subcommand(e->id.substr(prefix.size()), e->summary);
    auto params = std::make_shared<std::string>("{}");
    auto seed = std::make_shared<std::uint64_t>(1);
    s->add_option("--params", *params, "parameters as a JSON object");
    s->add_option("--seed", *seed, "master seed");
    s->callback([&action, id = e->id, params, seed] {
      action = [id, params, seed] {
        std::cout << cli::to_json(cli::run(id, parse_json(*params, "--params"), *seed)).dump(2) << '\n';
        return 0;
      };
    });
  }
}

void add_perc(CLI::App& app, std::function<int()>& action) {
  auto* perc = app.add_subcommand("perc", "bootstrap percolation estimates");
  perc->require_subcommand(1);
  struct Opts {
    std::string family = "grid", rule = "threshold-2", gnuplot;
    int n = 32, points = 29;
    double lo = 0.01, hi = 0.15;
    long long trials = 1000;
    std::uint64_t seed = 1;
  };
  auto o = std::make_shared<Opts>();
  auto* sweep = perc->add_subcommand("sweep", "CSV (n, p, estimate, ci_lo, ci_hi, reference) over a grid of p");
  sweep->add_option("--family", o->family, "grid | torus | complete | random-regular-<d>");
  sweep->add_option("--n", o->n, "side for grid and torus, order otherwise")->check(CLI::Range(1, 4096));
  sweep->add_option("--rule", o->rule, "threshold-<r> | majority");
  sweep->add_option("--lo", o->lo)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--hi", o->hi)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--points", o->points)->check(CLI::Range(1, 10000));
  sweep->add_option("--trials", o->trials)->check(CLI::Range(1LL, 100000000LL));
  sweep->add_option("--seed", o->seed);
  sweep->add_option("--gnuplot", o->gnuplot, "also write a gnuplot script plotting the CSV to this file");
  sweep->callback([&action, o] {
    action = [o] {
      perc::Rule rule;
      if (o->rule == "majority") rule = perc::Rule::strict_majority();
      else if (o->rule.rfind("threshold-", 0) == 0) rule = perc::Rule::threshold(std::stoi(o->rule.substr(10)));
      else fail(ErrorCode::kBadParams, "rule must be threshold-<r> or majority");
      auto g = perc::family(o->family, o->n, o->seed);
      auto s = perc::threshold_sweep(g, perc::linear_grid(o->lo, o->hi, o->points), rule, o->trials, o->seed);
      const bool square = o->family == "grid" || o->family == "torus";
      std::ostringstream csv;
      csv << std::setprecision(6) << "n,p,estimate,ci_lo,ci_hi,reference\n";
      for (const auto& e : s.points) {
        csv << o->n << ',' << e.p << ',' << e.estimate << ',' << e.ci_lo << ',' << e.ci_hi << ',';
        if (square && o->n > 1) csv << perc::holroyd_reference(o->n);
        csv << '\n';
      }
      std::cout << csv.str();
      if (!o->gnuplot.empty()) {
        std::ofstream(o->gnuplot) << "set datafile separator ','\nset key autotitle columnhead\n"
                                     "set xlabel 'p'\nset ylabel 'P(full infection)'\n"
                                     "plot '-' using 2:3:4:5 with yerrorlines title 'estimate'\n"
                                  << csv.str() << "e\n";
      }
      return 0;
    };
  });
}

void add_gl2(CLI::App& app, std::function<int()>& action) {
  auto* g = app.add_subcommand("gl2", "row-operation distances in GL(n,2); matrices as comma-separated hex rows");
  g->require_subcommand(1);
  auto m = std::make_shared<std::string>();
  auto n = std::make_shared<int>(3);

  auto* dist = g->add_subcommand("dist", "exact distance to the identity with a reducing word, n <= 5");
  dist->add_option("--m", *m, "matrix, e.g. 2,1")->required();
  dist->callback([&action, m] {
    action = [m] {
      auto mat = gl2::from_hex(*m);
      auto d = gl2::distance(mat);
      std::cout << json{{"matrix", gl2::to_hex(mat)}, {"distance", d.distance}, {"word", ops_json(d.word)}}.dump() << '\n';
      return 0;
    };
  });
  auto* greedy = g->add_subcommand("greedy", "block-column greedy reduction, replay-checked");
  greedy->add_option("--m", *m, "matrix, e.g. 2,1")->required();
  greedy->callback([&action, m] {
    action = [m] {
      auto mat = gl2::from_hex(*m);
      auto r = gl2::greedy_reduce(mat);
      std::cout << json{{"matrix", gl2::to_hex(mat)}, {"count", r.count}, {"block", r.block},
                        {"replays", gl2::replay_reduces(mat, r.ops)}, {"ops", ops_json(r.ops)}}
                       .dump()
                << '\n';
      return 0;
    };
  });
  auto* diam = g->add_subcommand("diameter", "diameter, layer sizes and extremal matrices, n <= 5");
  diam->add_option("--n", *n, "order")->required();
  diam->callback([&action, n] {
    action = [n] {
      auto d = gl2::diameter(*n);
      json ext = json::array();
      for (const auto& x : d.extremal) ext.push_back(gl2::to_hex(x));
      std::cout << json{{"n", *n}, {"diameter", d.diameter}, {"extremal_count", d.extremal_count},
                        {"layers", d.layers}, {"extremal", ext}}
                       .dump()
                << '\n';
      return 0;
    };
  });
}

}  // namespace

void add_module_verbs(CLI::App& app, std::function<int()>& action) {
  add_gen(app, action);
  add_cycles(app, action);
  add_tour(app, action);
  add_registry_group(app, action, "color", "colouring.", "vertex, edge and hypergraph colouring problems");
  add_registry_group(app, action, "fam", "families.", "set families and independence complexes");
  add_registry_group(app, action, "ext", "extremal.", "Turan numbers, bipartization and hypergraph Ramsey numbers");
  add_registry_group(app, action, "des", "designs.", "Latin squares, 3-tournaments and symmetric Ramsey designs");
  add_perc(app, action);
  add_gl2(app, action);
}

}  // namespace iml::tools
