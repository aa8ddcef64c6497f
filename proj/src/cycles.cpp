#include "cyclemax/cycles.hpp"

#include <cmath>

namespace cyclemax {

std::string to_string(CycleSumMethod method) {
  switch (method) {
    case CycleSumMethod::enumeration:
      return "enumeration";
    case CycleSumMethod::subset_dp:
      return "subset-dp";
    case CycleSumMethod::identity:
      return "identity";
  }
  return "unknown";
}

namespace {

int support_vertex_count(const WeightFunction& w) {
  std::vector<char> seen(static_cast<size_t>(w.n()), 0);
  for (const auto& [key, value] : w.entries()) {
    if (value > 0.0) {
      seen[key.u] = 1;
      seen[key.v] = 1;
    }
  }
  int count = 0;
  for (char c : seen) count += c;
  return count;
}

}  // namespace

CycleSumValue cycle_sum(const WeightFunction& w, int k) {
  CycleSumMethod method =
      support_vertex_count(w) <= 18 ? CycleSumMethod::subset_dp : CycleSumMethod::enumeration;
  return cycle_sum(w, k, method);
}

CycleSumValue cycle_sum(const WeightFunction& w, int k, CycleSumMethod method) {
  return CycleSumValue{k, cycle_sum_as(w, k, method), method};
}

double cycle_sum_via_identity(const WeightFunction& w, int k) {
  return cycle_sum_as(w, k, CycleSumMethod::identity);
}

double cycle_sum_with_constraints(const WeightFunction& w, int k,
                                  std::span<const EdgeKey> required,
                                  std::span<const EdgeKey> forbidden) {
  WeightGrid<double> grid = WeightGrid<double>::from(w);
  return cycle_sum_enumeration(grid, k, required, forbidden);
}

double cycle_sum_upper_bound(int k) { return 1.0 / std::pow(static_cast<double>(k), k); }

namespace {

struct CountDfs {
  const SimpleGraph& g;
  int len;
  VertexId start = 0;
  VertexId second = 0;
  std::vector<char> visited;
  long long total = 0;

  CountDfs(const SimpleGraph& graph, int l)
      : g(graph), len(l), visited(static_cast<size_t>(graph.vertex_bound()), 0) {}

  void run() {
    for (VertexId s : g.vertices()) {
      start = s;
      visited[s] = 1;
      for (VertexId nxt : g.neighbors(s)) {
        if (nxt <= s) continue;
        second = nxt;
        visited[nxt] = 1;
        extend(nxt, 2);
        visited[nxt] = 0;
      }
      visited[s] = 0;
    }
  }

  void extend(VertexId cur, int depth) {
    if (depth == len) {
      if (cur > second && g.has_edge(cur, start)) ++total;
      return;
    }
    for (VertexId next : g.neighbors(cur)) {
      if (next <= start || visited[next]) continue;
      visited[next] = 1;
      extend(next, depth + 1);
      visited[next] = 0;
    }
  }
};

}  // namespace

long long count_cycles(const SimpleGraph& g, int len) {
  if (len < 3) fail(ErrorCode::bad_cycle_length, "cycles need at least 3 vertices");
  if (len > g.order()) return 0;
  CountDfs dfs(g, len);
  dfs.run();
  return dfs.total;
}

}  // namespace cyclemax
