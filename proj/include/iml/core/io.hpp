#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/hypergraph.hpp"

namespace iml::io {

// graph6 / digraph6 as used by nauty (digraph6 carries the leading '&').
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
std::string to_digraph6(const Digraph& d);
Digraph from_digraph6(std::string_view text);

// "n m" header followed by m lines "u v".
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// "n" header followed by lines "u -> v".
std::string to_arc_list(const Digraph& d);
Digraph from_arc_list(std::string_view text);

// JSON arrays of integer arrays; the vertex count travels in an object
// wrapper {"n": .., "edges"/"sets": [[..], ..]}.
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SetFamily& f);
SetFamily set_family_from_json(const nlohmann::json& j);

nlohmann::json mask_to_json(Mask m);
Mask mask_from_json(const nlohmann::json& j);

// Subset as a binary string, element 0 first ("0110" = {1,2}).
std::string binary_string(Mask m, int n);

}  // namespace iml::io
