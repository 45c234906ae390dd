#pragma once

#include <cstdint>
#include <random>

#include "iml/core/graph.hpp"

namespace iml {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for trial i of a seeded experiment.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t i) { return std::mt19937_64(splitmix64(seed ^ i)); }

inline Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p < 0 ? 0 : (p > 1 ? 1 : p));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace iml
