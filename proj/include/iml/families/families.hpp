#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/graph.hpp"

namespace iml::fam {

struct FamilyConstraints {
  int intersecting = 0;   // |A ∩ B| >= this for all A, B (A = B included)
  bool antichain = false;
  int diameter = -1;      // |A △ B| <= this; -1 for no bound
};

struct FamilyResult {
  int size = 0;
  std::vector<Mask> family;  // sorted by (size, value)
};

inline constexpr int kMaxFamilyGround = 10;

// Maximum family of subsets of [n] satisfying the constraints, by maximum
// clique in the compatibility graph on admissible subsets. n <= 10.
FamilyResult max_family(int n, const FamilyConstraints& c);
bool satisfies(const std::vector<Mask>& family, const FamilyConstraints& c);
// Subset as a length-n 0/1 string, element 0 first.
std::string subset_string(Mask s, int n);

// Independent sets of G (the empty set included) ordered by (size, value).
// Throws TooLarge beyond kMaxComplexSize.
inline constexpr std::size_t kMaxComplexSize = 1000000;
std::vector<Mask> independence_complex(const Graph& g);
std::vector<long long> layer_profile(const Graph& g);

struct WidthResult {
  int width = 0;
  long long max_layer = 0;
  std::vector<Mask> antichain;            // a maximum antichain
  std::vector<std::vector<Mask>> chains;  // a minimum chain partition
};
// Dilworth width of the inclusion order on independent sets, as a minimum
// flow through the cover graph. The antichain comes from the minimum cut and
// the chains from a decomposition of the flow; their sizes agree.
WidthResult width_independence_complex(const Graph& g);

struct WidthTrial {
  int width = 0;
  long long max_layer = 0;
  double ratio = 1;
};
struct WidthExperiment {
  std::vector<WidthTrial> trials;
  double mean_ratio = 1, min_ratio = 1, max_ratio = 1;
};
// G(n, c/n) samples; trial i draws from a generator seeded by mixing seed and i.
WidthExperiment random_graph_width(int n, double c, int trials, std::uint64_t seed);

}  // namespace iml::fam
