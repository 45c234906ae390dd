#include "iml/perc/perc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"

namespace iml::perc {

Adjacency adjacency(const Graph& g) {
  Adjacency adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Adjacency grid(int side) {
  Adjacency adj(side * side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      int v = i * side + j;
      if (i > 0) adj[v].push_back(v - side);
      if (j > 0) adj[v].push_back(v - 1);
      if (j + 1 < side) adj[v].push_back(v + 1);
      if (i + 1 < side) adj[v].push_back(v + side);
    }
  return adj;
}

Adjacency torus(int side) {
  if (side < 3) fail(ErrorCode::kInvalidArgument, "torus needs side >= 3");
  Adjacency adj(side * side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      int v = i * side + j;
      adj[v] = {((i + side - 1) % side) * side + j, i * side + (j + side - 1) % side, i * side + (j + 1) % side,
                ((i + 1) % side) * side + j};
    }
  return adj;
}

Adjacency complete(int n) {
  Adjacency adj(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) adj[v].push_back(u);
  return adj;
}

Adjacency random_regular(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2) fail(ErrorCode::kInvalidArgument, "no d-regular graph");
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
    std::shuffle(points.begin(), points.end(), rng);
    Adjacency adj(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) simple = false;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    if (simple) return adj;
  }
  fail(ErrorCode::kUnsatisfiable, "pairing model kept producing multigraphs");
}

Adjacency family(const std::string& name, int n, std::uint64_t seed) {
  if (name == "grid") return grid(n);
  if (name == "torus") return torus(n);
  if (name == "complete") return complete(n);
  const std::string rr = "random-regular-";
  if (name.rfind(rr, 0) == 0) return random_regular(n, std::stoi(name.substr(rr.size())), seed);
  fail(ErrorCode::kUnknownProblem, "unknown graph family " + name);
}

int needed(const Rule& rule, int degree) {
  if (rule.kind == Rule::Kind::kThreshold) return rule.r;
  return degree == 0 ? -1 : degree / 2 + 1;
}

Closure percolate(const Adjacency& g, const Rule& rule, std::vector<char> infected) {
  const int n = static_cast<int>(g.size());
  if (static_cast<int>(infected.size()) != n) fail(ErrorCode::kInvalidArgument, "one flag per vertex");
  if (rule.kind == Rule::Kind::kThreshold && rule.r < 1) fail(ErrorCode::kInvalidArgument, "threshold must be positive");
  std::vector<int> need(n), count(n, 0);
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    need[v] = needed(rule, static_cast<int>(g[v].size()));
    if (infected[v]) frontier.push_back(v);
  }
  Closure out;
  std::vector<int> next;
  std::vector<char> queued(n, 0);
  // Counts include every vertex infected before the round, so the rounds are
  // the synchronous ones.
  while (!frontier.empty()) {
    next.clear();
    for (int v : frontier)
      for (int u : g[v])
        if (!infected[u] && ++count[u] == need[u] && !queued[u]) {
          queued[u] = 1;
          next.push_back(u);
        }
    for (int u : next) infected[u] = 1;
    if (!next.empty()) ++out.rounds;
    frontier.swap(next);
  }
  out.full = std::all_of(infected.begin(), infected.end(), [](char c) { return c != 0; });
  out.infected = std::move(infected);
  return out;
}

void wilson_interval(Estimate& e) {
  if (e.trials == 0) return;
  const double z = 1.959963984540054, n = static_cast<double>(e.trials);
  const double phat = static_cast<double>(e.successes) / n;
  const double denom = 1 + z * z / n;
  const double centre = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  e.estimate = phat;
  e.ci_lo = e.successes == 0 ? 0.0 : std::max(0.0, centre - half);
  e.ci_hi = e.successes == e.trials ? 1.0 : std::min(1.0, centre + half);
}

namespace {

std::vector<double> uniforms(int n, std::uint64_t seed, long long trial) {
  auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& x : out) x = u(rng);
  return out;
}

std::vector<char> below(const std::vector<double>& u, double p) {
  std::vector<char> out(u.size());
  for (std::size_t v = 0; v < u.size(); ++v) out[v] = u[v] < p;
  return out;
}

void check_trials(long long trials) {
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "need at least one trial");
}

}  // namespace

std::vector<char> initial_set(int n, double p, std::uint64_t seed, long long trial) {
  return below(uniforms(n, seed, trial), p);
}

Estimate estimate_full_infection(const Adjacency& g, double p, const Rule& rule, long long trials, std::uint64_t seed) {
  check_trials(trials);
  if (p < 0 || p > 1) fail(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  Estimate e;
  e.p = p;
  e.trials = trials;
  const int n = static_cast<int>(g.size());
  for (long long i = 0; i < trials; ++i) e.successes += percolate(g, rule, initial_set(n, p, seed, i)).full;
  wilson_interval(e);
  return e;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
  return out;
}

double holroyd_reference(int side) { return std::numbers::pi * std::numbers::pi / (18 * std::log(side)); }

SweepResult threshold_sweep(const Adjacency& g, const std::vector<double>& grid_points, const Rule& rule,
                            long long trials, std::uint64_t seed) {
  check_trials(trials);
  for (std::size_t i = 0; i < grid_points.size(); ++i) {
    if (grid_points[i] < 0 || grid_points[i] > 1) fail(ErrorCode::kInvalidArgument, "grid must lie in [0, 1]");
    if (i > 0 && grid_points[i] <= grid_points[i - 1]) fail(ErrorCode::kInvalidArgument, "grid must increase");
  }
  SweepResult out;
  out.grid = grid_points;
  out.trials = trials;
  out.seed = seed;
  const int m = static_cast<int>(grid_points.size()), n = static_cast<int>(g.size());
  // first_full[j] counts trials whose least fully infecting grid index is j.
  std::vector<long long> first_full(m + 1, 0);
  for (long long i = 0; i < trials; ++i) {
    auto u = uniforms(n, seed, i);
    int lo = 0, hi = m;  // answer in [lo, hi]; hi = m means never
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (percolate(g, rule, below(u, grid_points[mid])).full) hi = mid;
      else lo = mid + 1;
    }
    ++first_full[lo];
  }
  long long cumulative = 0;
  for (int j = 0; j < m; ++j) {
    cumulative += first_full[j];
    Estimate e;
    e.p = grid_points[j];
    e.trials = trials;
    e.successes = cumulative;
    wilson_interval(e);
    out.points.push_back(e);
  }
  for (int j = 0; j < m; ++j)
    if (out.points[j].estimate >= 0.5) {
      if (j == 0) {
        out.p_half = grid_points[0];
      } else {
        double a = out.points[j - 1].estimate, b = out.points[j].estimate;
        out.p_half = grid_points[j - 1] + (0.5 - a) / (b - a) * (grid_points[j] - grid_points[j - 1]);
      }
      break;
    }
  return out;
}

}  // namespace iml::perc
