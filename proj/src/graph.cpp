#include "cyclemax/graph.hpp"

#include <algorithm>

namespace cyclemax {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) fail(ErrorCode::vertex_out_of_range, "negative vertex count");
  present_.assign(static_cast<size_t>(n), 1);
  adj_.assign(static_cast<size_t>(n), {});
  order_ = n;
}

SimpleGraph::SimpleGraph(int n, std::span<const EdgeKey> edges) : SimpleGraph(n) {
  for (const EdgeKey& e : edges) {
    if (e.u < 0 || e.v >= n)
      fail(ErrorCode::vertex_out_of_range,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
               ") outside vertex range [0," + std::to_string(n) + ")");
    if (has_edge(e.u, e.v))
      fail(ErrorCode::duplicate_edge,
           "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++edge_count_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<EdgeKey> edges)
    : SimpleGraph(n, std::span<const EdgeKey>(edges.begin(), edges.size())) {}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<EdgeKey> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) fail(ErrorCode::bad_cycle_length, "cycle needs at least 3 vertices");
  std::vector<EdgeKey> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, edges);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexId> SimpleGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<size_t>(order_));
  for (int v = 0; v < vertex_bound(); ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

const std::vector<VertexId>& SimpleGraph::neighbors(VertexId v) const {
  require_vertex(v);
  return adj_[v];
}

std::vector<EdgeKey> SimpleGraph::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_bound(); ++u)
    if (present_[u])
      for (VertexId v : adj_[u])
        if (v > u) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::without_vertices(std::span<const VertexId> drop) const {
  for (VertexId v : drop) require_vertex(v);
  SimpleGraph out = *this;
  for (VertexId v : drop) {
    if (!out.present_[v]) continue;  // duplicates in drop are harmless
    out.present_[v] = 0;
    --out.order_;
    for (VertexId u : out.adj_[v]) {
      auto& nb = out.adj_[u];
      nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
      --out.edge_count_;
    }
    out.adj_[v].clear();
  }
  return out;
}

SimpleGraph SimpleGraph::without_vertex(VertexId v) const {
  return without_vertices(std::span<const VertexId>(&v, 1));
}

SimpleGraph SimpleGraph::without_edge(EdgeKey e) const {
  if (!has_edge(e.u, e.v))
    fail(ErrorCode::edge_not_in_graph,
         "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  SimpleGraph out = *this;
  auto& a = out.adj_[e.u];
  a.erase(std::lower_bound(a.begin(), a.end(), e.v));
  auto& b = out.adj_[e.v];
  b.erase(std::lower_bound(b.begin(), b.end(), e.u));
  --out.edge_count_;
  return out;
}

SimpleGraph SimpleGraph::with_edge(EdgeKey e) const {
  require_vertex(e.u);
  require_vertex(e.v);
  if (has_edge(e.u, e.v))
    fail(ErrorCode::duplicate_edge,
         "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already present");
  SimpleGraph out = *this;
  auto& a = out.adj_[e.u];
  a.insert(std::lower_bound(a.begin(), a.end(), e.v), e.v);
  auto& b = out.adj_[e.v];
  b.insert(std::lower_bound(b.begin(), b.end(), e.u), e.u);
  ++out.edge_count_;
  return out;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  return a.present_ == b.present_ && a.adj_ == b.adj_;
}

void SimpleGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v))
    fail(ErrorCode::vertex_not_in_graph, "vertex " + std::to_string(v) + " not in graph");
}

}  // namespace cyclemax
