#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml::gen {

enum class GraphClass { kGraph, kCubic, kTournament, kRegularTournament };

struct GenSpec {
  int n = 0;
  GraphClass kind = GraphClass::kGraph;
  int min_degree = 0;
  int max_degree = -1;   // -1: unbounded
  int regular = -1;      // -1: not required
  int connectivity = 0;  // vertex-connectivity floor
  bool bipartite = false;
  int tournament_cap = 9;
};

GenSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GenSpec& spec);

// One canonical representative per isomorphism class, sorted by certificate.
// Throws Unsatisfiable for contradictory specs.
std::vector<Graph> generate_graphs(const GenSpec& spec);
std::vector<Digraph> generate_tournaments(const GenSpec& spec);
// Graphs on n vertices all of whose induced subgraphs satisfy `keep`; the
// predicate must be closed under vertex deletion, which lets the
// augmentation prune a branch as soon as it fails.
std::vector<Graph> generate_hereditary(int n, const std::function<bool(const Graph&)>& keep);
// graph6 / digraph6 lines for a GenSpec, whichever class it names.
std::vector<std::string> generate_lines(const GenSpec& spec);

inline constexpr int kMaxCubicOrder = 26;

// Connected cubic graphs on n vertices (n even, n >= 4), built by edge
// insertion (subdivide two edges, join the new vertices) with isomorph rejection.
std::vector<Graph> connected_cubic_graphs(int n);
// All cubic graphs on n vertices, including disconnected ones.
std::vector<Graph> cubic_graphs(int n);

bool satisfies(const Graph& g, const GenSpec& spec);

// k >= 2 diamonds (K_4 minus an edge) joined in a ring; cubic on 4k vertices.
Graph ring_of_diamonds(int k);

// True when no set of fewer than k edges separates two components that both contain a cycle.
bool is_cyclically_k_edge_connected(const Graph& g, int k);

struct AutMaximum {
  BigInt max_order = 0;
  std::vector<Graph> witnesses;
  double reference_bound = 0;  // n * 2^(n/4)
};
AutMaximum max_aut_3connected_cubic(int n);

}  // namespace iml::gen
