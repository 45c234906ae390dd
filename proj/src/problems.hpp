#pragma once

// Shared helpers for the problem registry sources.

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iml/cli/registry.hpp"
#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"

namespace iml::cli::detail {

using nlohmann::json;

inline Param int_param(std::string name, long long def, double lo, double hi, std::string help) {
  return {Param::Type::kInt, std::move(name), def, lo, hi, std::move(help)};
}
inline Param real_param(std::string name, double def, double lo, double hi, std::string help) {
  return {Param::Type::kDouble, std::move(name), def, lo, hi, std::move(help)};
}
inline Param string_param(std::string name, std::string def, std::string help) {
  return {Param::Type::kString, std::move(name), std::move(def), -1e18, 1e18, std::move(help)};
}
inline Param bool_param(std::string name, bool def, std::string help) {
  return {Param::Type::kBool, std::move(name), def, -1e18, 1e18, std::move(help)};
}
inline Param json_param(std::string name, json def, std::string help) {
  return {Param::Type::kJson, std::move(name), std::move(def), -1e18, 1e18, std::move(help)};
}

inline int geti(const json& p, const char* k) { return p.at(k).get<int>(); }
inline double getd(const json& p, const char* k) { return p.at(k).get<double>(); }
inline std::string gets(const json& p, const char* k) { return p.at(k).get<std::string>(); }

std::mt19937_64 master_rng(std::uint64_t seed, const std::string& id);
Digraph random_tournament(int n, std::mt19937_64& rng);
Digraph random_digraph(int n, double p, std::mt19937_64& rng);
// path | cycle | complete | star | petersen | prism | random (G(n, p)) | graph6:<code>
Graph named_graph(const std::string& name, int n, double p, std::mt19937_64& rng);
json graph_json(const Graph& g);
json digraph_json(const Digraph& d);

void add_digraph_problems(std::vector<ProblemEntry>& out);
void add_colouring_problems(std::vector<ProblemEntry>& out);
void add_structure_problems(std::vector<ProblemEntry>& out);

}  // namespace iml::cli::detail
