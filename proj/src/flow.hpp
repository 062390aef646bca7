#pragma once

// Unit-capacity-friendly Dinic max-flow used by the cut routines.

#include <algorithm>
#include <climits>
#include <queue>
#include <vector>

namespace lhc::detail {

class FlowNetwork {
 public:
  static constexpr int kInfinite = INT_MAX / 4;

  explicit FlowNetwork(int n) : graph_(static_cast<size_t>(n)), level_(static_cast<size_t>(n)), iter_(static_cast<size_t>(n)) {}

  int add_node() {
    graph_.emplace_back();
    level_.push_back(0);
    iter_.push_back(0);
    return static_cast<int>(graph_.size()) - 1;
  }

  void add_arc(int from, int to, int cap, int reverse_cap = 0) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, reverse_cap, static_cast<int>(graph_[from].size()) - 1});
  }

  /// Max flow from s to t, stopping as soon as `limit` units have been pushed.
  int max_flow(int s, int t, int limit = kInfinite) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (flow < limit) {
        int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network (valid after a complete max_flow).
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : graph_[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : graph_[v]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Arc& a = graph_[v][i];
      if (a.cap > 0 && level_[v] < level_[a.to]) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          graph_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace lhc::detail
