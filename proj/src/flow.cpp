#include "iml/core/flow.hpp"

#include <algorithm>
#include <queue>

namespace iml {

FlowNetwork::FlowNetwork(int nodes) : nodes_(nodes), out_(nodes), level_(nodes), next_(nodes) {}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  original_.push_back(capacity);
  out_[from].push_back(id);
  arcs_.push_back({from, 0});
  original_.push_back(0);
  out_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t FlowNetwork::dfs(int v, int t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (int& i = next_[v]; i < static_cast<int>(out_[v].size()); ++i) {
    int id = out_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (std::int64_t f = dfs(source, sink, kInfinity)) total += f;
  }
  return total;
}

std::int64_t FlowNetwork::flow_on(int arc) const { return original_[arc] - arcs_[arc].cap; }

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(nodes_, false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace iml
