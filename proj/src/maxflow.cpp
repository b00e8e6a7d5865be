#include "minnorm/maxflow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace minnorm {

namespace {

struct Arc {
  int to;
  double cap;
  int rev;
};

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

  void add_edge(int u, int v, double cap_uv, double cap_vu) {
    adj_[u].push_back({v, cap_uv, static_cast<int>(adj_[v].size())});
    adj_[v].push_back({u, cap_vu, static_cast<int>(adj_[u].size()) - 1});
  }

  double run(int s, int t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (true) {
        double pushed = dfs(s, t, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : adj_[u]) {
        if (a.cap > 0.0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& i = it_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      Arc& a = adj_[u][i];
      if (a.cap <= 0.0 || level_[a.to] != level_[u] + 1) continue;
      double pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0.0) {
        a.cap -= pushed;
        adj_[a.to][a.rev].cap += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

double max_flow_value(const WeightedGraph& graph) {
  graph.validate();
  if (!graph.source || !graph.sink)
    throw std::invalid_argument("max flow needs both source and sink");
  Dinic dinic(graph.num_vertices);
  for (const WeightedGraph::Edge& e : graph.edges) {
    if (graph.directed)
      dinic.add_edge(e.u, e.v, e.capacity, 0.0);
    else
      dinic.add_edge(e.u, e.v, e.capacity, e.capacity);
  }
  return dinic.run(*graph.source, *graph.sink);
}

}  // namespace minnorm
