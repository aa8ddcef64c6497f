#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/weight.hpp"

namespace cyclemax {

/// Dense symmetric weight table used by the enumeration and subset engines
/// (and mutated in place by the exchange optimizer).
template <class Real>
struct WeightGrid {
  int n = 0;
  std::vector<Real> cell;  // n*n, symmetric, zero diagonal

  WeightGrid() = default;
  explicit WeightGrid(int n_) : n(n_), cell(static_cast<size_t>(n_) * n_, Real(0)) {}

  static WeightGrid from(const BasicWeightFunction<Real>& w) {
    WeightGrid grid(w.n());
    for (const auto& [key, value] : w.entries()) grid.set(key.u, key.v, value);
    return grid;
  }

  Real at(VertexId u, VertexId v) const { return cell[static_cast<size_t>(u) * n + v]; }
  void set(VertexId u, VertexId v, Real x) {
    cell[static_cast<size_t>(u) * n + v] = x;
    cell[static_cast<size_t>(v) * n + u] = x;
  }

  Real total() const {
    Real sum = Real(0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) sum += at(u, v);
    return sum;
  }

  BasicWeightFunction<Real> to_weight_function(bool keep_zeros = false) const {
    std::vector<WeightEntry<Real>> entries;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (keep_zeros || at(u, v) > Real(0)) entries.push_back({u, v, at(u, v)});
    return BasicWeightFunction<Real>::from_entries(n, entries);
  }
};

namespace detail {

inline bool host_has_vertex(const SimpleGraph* host, int n, VertexId v) {
  return host ? host->has_vertex(v) : (v >= 0 && v < n);
}

inline bool host_has_edge(const SimpleGraph* host, int n, VertexId u, VertexId v) {
  return host ? host->has_edge(u, v) : (u != v && u >= 0 && v >= 0 && u < n && v < n);
}

inline int host_order(const SimpleGraph* host, int n) { return host ? host->order() : n; }

inline bool contains_edge(std::span<const EdgeKey> list, EdgeKey e) {
  return std::find(list.begin(), list.end(), e) != list.end();
}

/// Adjacency over edges that the engines may traverse: host edges with
/// positive weight, plus `required` edges (traversable even at weight zero),
/// minus `forbidden` edges. Lists are sorted, so traversal order and hence
/// floating-point summation order are canonical.
template <class Real>
std::vector<std::vector<VertexId>> support_adjacency(const WeightGrid<Real>& grid,
                                                     const SimpleGraph* host,
                                                     std::span<const EdgeKey> required = {},
                                                     std::span<const EdgeKey> forbidden = {}) {
  std::vector<std::vector<VertexId>> adj(static_cast<size_t>(grid.n));
  for (int u = 0; u < grid.n; ++u) {
    if (!host_has_vertex(host, grid.n, u)) continue;
    for (int v = u + 1; v < grid.n; ++v) {
      if (!host_has_edge(host, grid.n, u, v)) continue;
      EdgeKey e(u, v);
      if (contains_edge(forbidden, e)) continue;
      if (grid.at(u, v) > Real(0) || contains_edge(required, e)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

template <class Real>
struct PathDfs {
  const WeightGrid<Real>& grid;
  const std::vector<std::vector<VertexId>>& adj;
  std::vector<char> visited;
  int target_vertices = 0;

  PathDfs(const WeightGrid<Real>& g, const std::vector<std::vector<VertexId>>& a)
      : grid(g), adj(a), visited(static_cast<size_t>(g.n), 0) {}

  // Sum of weight products over simple paths from `cur` state to `goal`
  // with exactly target_vertices vertices in total.
  Real to_terminal(VertexId cur, int depth, Real prod, VertexId goal) {
    if (depth == target_vertices - 1) {
      if (!visited[goal] &&
          std::binary_search(adj[cur].begin(), adj[cur].end(), goal))
        return prod * grid.at(cur, goal);
      return Real(0);
    }
    Real sum = Real(0);
    for (VertexId next : adj[cur]) {
      if (visited[next] || next == goal) continue;
      visited[next] = 1;
      sum += to_terminal(next, depth + 1, prod * grid.at(cur, next), goal);
      visited[next] = 0;
    }
    return sum;
  }

  // Sum over simple paths from the start with exactly target_vertices
  // vertices, any terminal.
  Real to_any(VertexId cur, int depth, Real prod) {
    if (depth == target_vertices) return prod;
    Real sum = Real(0);
    for (VertexId next : adj[cur]) {
      if (visited[next]) continue;
      visited[next] = 1;
      sum += to_any(next, depth + 1, prod * grid.at(cur, next));
      visited[next] = 0;
    }
    return sum;
  }
};

}  // namespace detail

/// Sum over simple paths in `host` with exactly `j` vertices and terminal
/// vertices `u`, `v` of the product of edge weights along the path. Each
/// path, as an unordered subgraph, contributes once.
template <class Real>
Real path_sum(const BasicWeightFunction<Real>& w, const SimpleGraph& host, int j, VertexId u,
              VertexId v, const WeightGrid<Real>* grid_hint = nullptr) {
  if (!host.has_vertex(u) || !host.has_vertex(v))
    fail(ErrorCode::vertex_not_in_graph, "path terminal not in graph");
  if (u == v) fail(ErrorCode::identical_vertices, "path terminals must differ");
  if (j < 2 || j > host.order())
    fail(ErrorCode::bad_path_length, "path vertex count " + std::to_string(j) + " out of range");
  WeightGrid<Real> local;
  const WeightGrid<Real>* grid = grid_hint;
  if (!grid) {
    local = WeightGrid<Real>::from(w);
    grid = &local;
  }
  auto adj = detail::support_adjacency(*grid, &host);
  detail::PathDfs<Real> dfs(*grid, adj);
  dfs.target_vertices = j;
  dfs.visited[u] = 1;
  return dfs.to_terminal(u, 1, Real(1), v);
}

template <class Real>
Real path_sum(const BasicWeightFunction<Real>& w, int j, VertexId u, VertexId v) {
  return path_sum(w, SimpleGraph::complete(w.n()), j, u, v);
}

/// Sum of path_sum over all terminals != u.
template <class Real>
Real path_sum_from(const BasicWeightFunction<Real>& w, const SimpleGraph& host, int j, VertexId u,
                   const WeightGrid<Real>* grid_hint = nullptr) {
  if (!host.has_vertex(u)) fail(ErrorCode::vertex_not_in_graph, "path origin not in graph");
  if (j < 2 || j > host.order())
    fail(ErrorCode::bad_path_length, "path vertex count " + std::to_string(j) + " out of range");
  WeightGrid<Real> local;
  const WeightGrid<Real>* grid = grid_hint;
  if (!grid) {
    local = WeightGrid<Real>::from(w);
    grid = &local;
  }
  auto adj = detail::support_adjacency(*grid, &host);
  detail::PathDfs<Real> dfs(*grid, adj);
  dfs.target_vertices = j;
  dfs.visited[u] = 1;
  return dfs.to_any(u, 1, Real(1));
}

template <class Real>
Real path_sum_from(const BasicWeightFunction<Real>& w, int j, VertexId u) {
  return path_sum_from(w, SimpleGraph::complete(w.n()), j, u);
}

namespace detail {

/// Canonical cycle enumeration: every cycle is generated from its smallest
/// vertex, with orientation fixed by second-vertex < last-vertex. Required
/// edges must all appear on the cycle and contribute factor one to the
/// product instead of their weight.
template <class Real>
struct CycleDfs {
  const WeightGrid<Real>& grid;
  std::vector<std::vector<VertexId>> adj;
  std::vector<char> visited;
  std::span<const EdgeKey> required;
  int k = 0;
  VertexId start = 0;
  VertexId second = 0;
  Real total = Real(0);

  CycleDfs(const WeightGrid<Real>& g, const SimpleGraph* host, std::span<const EdgeKey> req,
           std::span<const EdgeKey> forb)
      : grid(g),
        adj(support_adjacency(g, host, req, forb)),
        visited(static_cast<size_t>(g.n), 0),
        required(req) {}

  Real edge_factor(VertexId a, VertexId b, int& used_required) const {
    if (!required.empty() && contains_edge(required, EdgeKey(a, b))) {
      ++used_required;
      return Real(1);
    }
    return grid.at(a, b);
  }

  void run() {
    for (start = 0; start < grid.n; ++start) {
      visited[start] = 1;
      for (VertexId nxt : adj[start]) {
        if (nxt <= start) continue;
        second = nxt;
        int used = 0;
        Real factor = edge_factor(start, nxt, used);
        visited[nxt] = 1;
        extend(nxt, 2, factor, used);
        visited[nxt] = 0;
      }
      visited[start] = 0;
    }
  }

  void extend(VertexId cur, int depth, Real prod, int used_required) {
    int required_left = static_cast<int>(required.size()) - used_required;
    if (required_left > k - depth + 1) return;  // not enough edges left
    if (depth == k) {
      if (cur > second && std::binary_search(adj[cur].begin(), adj[cur].end(), start)) {
        int used = used_required;
        Real factor = edge_factor(cur, start, used);
        if (used == static_cast<int>(required.size())) total += prod * factor;
      }
      return;
    }
    for (VertexId next : adj[cur]) {
      if (next <= start || visited[next]) continue;
      int used = used_required;
      Real factor = edge_factor(cur, next, used);
      visited[next] = 1;
      extend(next, depth + 1, prod * factor, used);
      visited[next] = 0;
    }
  }
};

/// Path DFS with edge constraints: paths must traverse every `required`
/// edge (contributing factor one instead of its weight) and the adjacency
/// already excludes forbidden edges.
template <class Real>
struct ConstrainedPathDfs {
  const WeightGrid<Real>& grid;
  std::vector<std::vector<VertexId>> adj;
  std::vector<char> visited;
  std::span<const EdgeKey> required;
  int target_vertices = 0;

  ConstrainedPathDfs(const WeightGrid<Real>& g, const SimpleGraph* host,
                     std::span<const EdgeKey> req, std::span<const EdgeKey> forb)
      : grid(g),
        adj(support_adjacency(g, host, req, forb)),
        visited(static_cast<size_t>(g.n), 0),
        required(req) {}

  Real edge_factor(VertexId a, VertexId b, int& used) const {
    if (!required.empty() && contains_edge(required, EdgeKey(a, b))) {
      ++used;
      return Real(1);
    }
    return grid.at(a, b);
  }

  Real to_terminal(VertexId cur, int depth, Real prod, VertexId goal, int used) {
    if (static_cast<int>(required.size()) - used > target_vertices - depth) return Real(0);
    if (depth == target_vertices - 1) {
      if (!visited[goal] && std::binary_search(adj[cur].begin(), adj[cur].end(), goal)) {
        int total_used = used;
        Real factor = edge_factor(cur, goal, total_used);
        if (total_used == static_cast<int>(required.size())) return prod * factor;
      }
      return Real(0);
    }
    Real sum = Real(0);
    for (VertexId next : adj[cur]) {
      if (visited[next] || next == goal) continue;
      int next_used = used;
      Real factor = edge_factor(cur, next, next_used);
      visited[next] = 1;
      sum += to_terminal(next, depth + 1, prod * factor, goal, next_used);
      visited[next] = 0;
    }
    return sum;
  }
};

}  // namespace detail

/// Sum over simple u-v paths on exactly j vertices of the edge-weight
/// product, where every `required` edge must lie on the path (factor one)
/// and `forbidden` edges may not.
template <class Real>
Real path_sum_constrained(const WeightGrid<Real>& grid, const SimpleGraph* host, int j, VertexId u,
                          VertexId v, std::span<const EdgeKey> required = {},
                          std::span<const EdgeKey> forbidden = {}) {
  if (u == v) fail(ErrorCode::identical_vertices, "path terminals must differ");
  if (j < 2 || j > detail::host_order(host, grid.n))
    fail(ErrorCode::bad_path_length, "path vertex count " + std::to_string(j) + " out of range");
  detail::ConstrainedPathDfs<Real> dfs(grid, host, required, forbidden);
  dfs.target_vertices = j;
  dfs.visited[u] = 1;
  return dfs.to_terminal(u, 1, Real(1), v, 0);
}

/// Sum over k-cycle subgraphs of the host of the product of edge weights,
/// by direct enumeration. Cycles must contain every `required` edge and no
/// `forbidden` edge; required edges contribute factor one, so the result is
/// polynomial in the remaining weights even when required weights are zero.
template <class Real>
Real cycle_sum_enumeration(const WeightGrid<Real>& grid, int k,
                           std::span<const EdgeKey> required = {},
                           std::span<const EdgeKey> forbidden = {},
                           const SimpleGraph* host = nullptr) {
  if (k < 3) fail(ErrorCode::bad_cycle_length, "cycles need at least 3 vertices");
  if (k > detail::host_order(host, grid.n)) return Real(0);
  detail::CycleDfs<Real> dfs(grid, host, required, forbidden);
  dfs.k = k;
  dfs.run();
  return dfs.total;
}

/// Subset dynamic program over the support's vertex set: path sums anchored
/// at each subset's smallest vertex, closed into cycles and halved to undo
/// the two traversal directions.
template <class Real>
Real cycle_sum_subset_dp(const WeightGrid<Real>& grid, int k) {
  if (k < 3) fail(ErrorCode::bad_cycle_length, "cycles need at least 3 vertices");
  std::vector<VertexId> verts;
  for (int v = 0; v < grid.n; ++v) {
    for (int u = 0; u < grid.n; ++u) {
      if (u != v && grid.at(u, v) > Real(0)) {
        verts.push_back(v);
        break;
      }
    }
  }
  int s = static_cast<int>(verts.size());
  if (s < k) return Real(0);
  if (s > 18) fail(ErrorCode::internal_error, "support too large for subset engine");

  const std::uint32_t full = (s >= 32) ? 0xFFFFFFFFu : ((1u << s) - 1u);
  std::vector<Real> f(static_cast<size_t>(full + 1) * s, Real(0));
  auto slot = [&](std::uint32_t mask, int i) -> Real& {
    return f[static_cast<size_t>(mask) * s + i];
  };
  for (int i = 0; i < s; ++i) slot(1u << i, i) = Real(1);

  Real total = Real(0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int size = std::popcount(mask);
    if (size < 1) continue;
    int anchor = std::countr_zero(mask);
    if (size == k) {
      for (int i = anchor + 1; i < s; ++i) {
        if (!(mask & (1u << i))) continue;
        const Real& val = slot(mask, i);
        if (!(val > Real(0))) continue;
        Real w = grid.at(verts[i], verts[anchor]);
        if (w > Real(0)) total += val * w;
      }
      continue;
    }
    for (int i = 0; i < s; ++i) {
      if (!(mask & (1u << i))) continue;
      const Real val = slot(mask, i);
      if (!(val > Real(0))) continue;
      for (int j = anchor + 1; j < s; ++j) {
        if (mask & (1u << j)) continue;
        Real w = grid.at(verts[i], verts[j]);
        if (w > Real(0)) slot(mask | (1u << j), j) += val * w;
      }
    }
  }
  return total / Real(2);
}

/// Exact number of len-cycle subgraphs, each counted once.
long long count_cycles(const SimpleGraph& g, int len);

}  // namespace cyclemax
