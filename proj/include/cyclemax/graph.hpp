#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclemax/errors.hpp"

namespace cyclemax {

using VertexId = int;

/// Unordered vertex pair stored with u < v.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 0;

  EdgeKey() = default;
  EdgeKey(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) fail(ErrorCode::self_loop, "self-loop edge (" + std::to_string(a) + ")");
  }

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Undirected simple graph on vertex ids in [0, vertex_bound).
///
/// Vertices keep their original ids across deletions: removing a vertex
/// marks it absent instead of re-indexing, so derived graphs can still be
/// described in terms of the original labels. Instances are immutable
/// after construction; the restriction operations return new values.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Graph with vertices 0..n-1 present and no edges.
  explicit SimpleGraph(int n);

  /// Graph with vertices 0..n-1 and the given edges.
  SimpleGraph(int n, std::span<const EdgeKey> edges);
  SimpleGraph(int n, std::initializer_list<EdgeKey> edges);

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);  // 0-1-...-(n-1)-0

  int vertex_bound() const { return static_cast<int>(present_.size()); }
  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < vertex_bound() && present_[v];
  }
  bool has_edge(VertexId u, VertexId v) const;

  /// Sorted list of present vertex ids.
  std::vector<VertexId> vertices() const;

  /// Sorted neighbor list of a present vertex.
  const std::vector<VertexId>& neighbors(VertexId v) const;

  /// Canonical (u < v, lexicographic) list of edges.
  std::vector<EdgeKey> edges() const;

  /// Induced subgraph on the present vertices minus `drop`.
  SimpleGraph without_vertices(std::span<const VertexId> drop) const;
  SimpleGraph without_vertex(VertexId v) const;

  /// Same vertices, one edge removed. The edge must exist.
  SimpleGraph without_edge(EdgeKey e) const;

  /// Same vertices, one edge added (endpoints must be present).
  SimpleGraph with_edge(EdgeKey e) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  void require_vertex(VertexId v) const;

  std::vector<char> present_;
  std::vector<std::vector<VertexId>> adj_;
  int order_ = 0;
  int edge_count_ = 0;
};

}  // namespace cyclemax
