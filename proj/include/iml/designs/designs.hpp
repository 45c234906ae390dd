#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iml/core/bits.hpp"
#include "iml/core/graph.hpp"
#include "iml/core/rational.hpp"

namespace iml::des {

// ---- Latin squares avoiding an array -------------------------------------

using Square = std::vector<std::vector<int>>;  // n x n; arrays use 0 for "no constraint"

bool is_latin(const Square& l);  // symbols 1..n, each once per row and column
// Largest multiplicity of a nonzero symbol is at most n - 2.
bool within_multiplicity_cap(const Square& a);
// A Latin square differing from A in every constrained cell, by backtracking
// on the most constrained cell. With conjecture_mode the multiplicity cap is a
// precondition (PreconditionUnmet otherwise).
std::optional<Square> avoid_latin(const Square& a, bool conjecture_mode = false);

struct AvoidScan {
  long long arrays = 0;   // arrays decided
  long long classes = 0;  // symmetry classes (exhaustive mode only)
  std::optional<Square> counterexample;
};
// Exhaustive mode (n <= 4): every array in which each symbol fills exactly
// n - 2 cells, up to row, column and symbol permutations. Arrays with fewer
// entries are sub-arrays of these, and avoiding a superset avoids the subset.
AvoidScan avoidance_scan_exhaustive(int n);
// Random mode: `budget` arrays of the same saturated kind, drawn from
// trial_rng(seed, i).
AvoidScan avoidance_scan_random(int n, long long budget, std::uint64_t seed);
Square random_saturated_array(int n, std::uint64_t seed, long long index);

// ---- Cyclic orderings of disjoint bases ----------------------------------

struct Matroid {
  int size = 0;
  std::function<bool(Mask)> independent;  // elements 0..size-1, size <= 64
  int rank() const;
};
// Cycle matroid of a multigraph; element i is edges[i].
Matroid graphic_matroid(int n, const std::vector<std::pair<int, int>>& edges);

// A cyclic order of the union of the bases in which every window of `rank`
// cyclically consecutive elements is a base. block_mode also requires each
// given base to occupy a consecutive arc. NotBases unless the sets are
// pairwise disjoint bases.
std::optional<std::vector<int>> cyclic_base_ordering(const Matroid& m, const std::vector<std::vector<int>>& bases,
                                                     bool block_mode = false);
bool windows_are_bases(const Matroid& m, const std::vector<int>& order);

// ---- 3-tournaments --------------------------------------------------------

// root[triple_index(n, a, b, c)] is the root of {a, b, c}.
struct ThreeTournament {
  int n = 0;
  std::vector<int> root;
};
ThreeTournament random_three_tournament(int n, std::uint64_t seed);
ThreeTournament min_root_tournament(int n);  // every triple rooted at its least vertex
// Vertices z outside {x} for which some y makes x the root of {x, y, z}.
Mask dominated_by(const ThreeTournament& t, int x);
bool dominates(const ThreeTournament& t, Mask x);

struct Domination {
  int size = 0;
  Mask set = 0;
};
Domination dom_3tournament(const ThreeTournament& t);  // exact, by increasing size
// Every 4 vertices span at least `same` triples sharing a root.
bool root_condition(const ThreeTournament& t, int same);
inline bool pair_condition_check(const ThreeTournament& t) { return root_condition(t, 2); }

struct DomScan {
  int max_dom = 0;
  ThreeTournament witness;
  std::vector<long long> histogram;  // histogram[d] = samples with dom = d
  long long samples = 0;
};
DomScan dom_scan(int n, long long budget, std::uint64_t seed);

// ---- Magic matrices ---------------------------------------------------------

// n x n matrices with entries >= min_entry and all line sums k. n <= 4, k <= 40.
BigInt count_line_sum(int n, int k, int min_entry);
inline BigInt count_magic(int n, int k) { return count_line_sum(n, k, 0); }
inline BigInt count_positive_magic(int n, int k) { return count_line_sum(n, k, 1); }
Rational positive_fraction(int n, int k);

// Coefficients (constant term first) of the polynomial through
// (k, |M(n,k)|) for k = 0..(n-1)^2, by exact Lagrange interpolation.
std::vector<Rational> ehrhart_polynomial(int n);
Rational evaluate(const std::vector<Rational>& poly, const Rational& x);
struct EhrhartCheck {
  bool polynomial_matches = true;  // H_n(k) = |M(n,k)| for every k <= k_max
  bool reciprocity = true;         // (-1)^(n+1) H_n(-k) = positive count for 1 <= k <= k_max
  int first_failure = -1;
};
EhrhartCheck ehrhart_check(int n, int k_max);

// ---- Path systems ----------------------------------------------------------

struct PathRealization {
  Graph graph;
  std::vector<std::pair<int, int>> edge_of;  // label -> endpoints
};
// Labels are 0..labels-1. Each sequence must become a simple path using its
// labels in order, in a simple graph. labels <= 12.
std::optional<PathRealization> realize_path_system(int labels, const std::vector<std::vector<int>>& seqs);
bool realizes(const PathRealization& r, const std::vector<std::vector<int>>& seqs);

// ---- Symmetric-group Ramsey ------------------------------------------------

// Copies of S_r in S_n: r nonempty words partitioning [n], with all r!
// concatenations. Each copy is a sorted list of permutation ranks.
std::vector<std::vector<int>> symmetric_copies(int n, int r);
int permutation_rank(const std::vector<int>& perm);
// Every k-colouring of S_n has a monochromatic copy of S_r. n <= 4.
bool sym_ramsey_check(int n, int k, int r);

}  // namespace iml::des
