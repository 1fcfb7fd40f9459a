// Dinic max-flow on integer capacities, with the source side of the
// minimum cut closest to the source.

#ifndef STABLEPATH_MAX_FLOW_HPP_
#define STABLEPATH_MAX_FLOW_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace stablepath {

class MaxFlow {
 public:
  using Cap = std::int64_t;

  explicit MaxFlow(int nodes) : adj_(nodes) {}

  int nodes() const { return static_cast<int>(adj_.size()); }

  void add_edge(int from, int to, Cap cap) {
    if (cap < 0) throw std::invalid_argument("negative capacity");
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  Cap solve(int source, int sink) {
    Cap total = 0;
    while (bfs(source, sink)) {
      next_.assign(nodes(), 0);
      while (Cap pushed = dfs(source, sink, std::numeric_limits<Cap>::max())) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual graph; call after solve.
  /// This is the inclusion-minimal source side among all minimum cuts.
  std::vector<char> source_side(int source) const {
    std::vector<char> seen(nodes(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : adj_[u]) {
        const auto& e = edges_[id];
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    Cap cap;  // residual
  };

  bool bfs(int source, int sink) {
    level_.assign(nodes(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : adj_[u]) {
        const auto& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap dfs(int u, int sink, Cap limit) {
    if (u == sink) return limit;
    for (auto& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      const int id = adj_[u][i];
      auto& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      if (Cap got = dfs(e.to, sink, std::min(limit, e.cap))) {
        e.cap -= got;
        edges_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace stablepath

#endif  // STABLEPATH_MAX_FLOW_HPP_
