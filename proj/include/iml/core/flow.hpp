#pragma once

#include <cstdint>
#include <vector>

namespace iml {

/// Dinic max-flow on integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  // Returns the index of the forward arc, usable with flow_on().
  int add_arc(int from, int to, std::int64_t capacity);
  std::int64_t max_flow(int source, int sink);
  std::int64_t flow_on(int arc) const;
  // After max_flow: nodes reachable from the source in the residual graph.
  std::vector<bool> source_side(int source) const;

  static constexpr std::int64_t kInfinity = std::int64_t{1} << 50;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
  };
  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t pushed);

  int nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> original_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_, next_;
};

}  // namespace iml
