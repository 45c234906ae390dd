#pragma once

#include <string>
#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/digraph.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml::gen {

/// Result of canonical labeling.
///
/// `certificate` is the graph6 (digraph6 for digraphs) string of the
/// canonically relabeled object, so two inputs are isomorphic exactly when
/// their certificates match. `labeling[v]` is the canonical position of v.
struct CanonicalForm {
  std::string certificate;
  BigInt aut_order = 1;
  std::vector<int> labeling;
  std::vector<std::vector<int>> generators;  // automorphisms as vertex maps
  std::vector<int> orbits;                   // orbit representative (least vertex) per vertex
};

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Digraph& d);

// Vertex-coloured variant: `colours` is an ordered list of disjoint masks
// covering all vertices; automorphisms must preserve every colour class and
// isomorphisms must map class i to class i.
CanonicalForm canonical_form(const Graph& g, const std::vector<Mask>& colours);

// Low-level entry: arc rows in both directions plus an ordered colouring.
CanonicalForm canonical_form_rows(const std::vector<Mask>& out, const std::vector<Mask>& in,
                                  const std::vector<Mask>& colours, bool directed);

}  // namespace iml::gen
