#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iml/core/graph.hpp"

namespace iml::perc {

// Neighbour lists; the percolation code runs on graphs far beyond 64 vertices.
using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const Graph& g);
Adjacency grid(int side);   // side x side grid, vertex i * side + j
Adjacency torus(int side);  // grid with wrap-around
Adjacency complete(int n);
// Uniform d-regular simple graph by the pairing model with restarts.
Adjacency random_regular(int n, int d, std::uint64_t seed);
// Named families: grid, torus, complete, random-regular-<d>. kUnknownProblem otherwise.
Adjacency family(const std::string& name, int n, std::uint64_t seed);

struct Rule {
  enum class Kind { kStrictMajority, kThreshold } kind = Kind::kStrictMajority;
  int r = 2;  // threshold rule: at least r infected neighbours
  static Rule strict_majority() { return {}; }
  static Rule threshold(int r) { return {Kind::kThreshold, r}; }
};
// Infected neighbours needed; -1 when the vertex can never be infected
// (strict majority of zero neighbours).
int needed(const Rule& rule, int degree);

struct Closure {
  std::vector<char> infected;
  int rounds = 0;  // synchronous rounds that infected at least one vertex
  bool full = false;
};
Closure percolate(const Adjacency& g, const Rule& rule, std::vector<char> infected);

struct Estimate {
  double p = 0;
  long long trials = 0;
  long long successes = 0;
  double estimate = 0;
  double ci_lo = 0, ci_hi = 0;  // Wilson 95%
};
void wilson_interval(Estimate& e);

// Trial i infects vertex v when u_v < p, with u drawn from trial_rng(seed, i).
// Sharing the uniforms across p couples the estimates monotonically.
std::vector<char> initial_set(int n, double p, std::uint64_t seed, long long trial);
Estimate estimate_full_infection(const Adjacency& g, double p, const Rule& rule, long long trials, std::uint64_t seed);

struct SweepResult {
  std::vector<double> grid;
  std::vector<Estimate> points;
  std::optional<double> p_half;  // linear interpolation where the estimate crosses 1/2
  long long trials = 0;
  std::uint64_t seed = 0;
};
// Same numbers as estimate_full_infection at every grid point; each trial
// binary-searches the least grid point giving full infection.
SweepResult threshold_sweep(const Adjacency& g, const std::vector<double>& grid, const Rule& rule, long long trials,
                            std::uint64_t seed);
std::vector<double> linear_grid(double lo, double hi, int points);
double holroyd_reference(int side);  // pi^2 / (18 ln side)

}  // namespace iml::perc
