#pragma once

#include <cmath>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/rational.hpp"

namespace cyclemax {

inline constexpr double kNormalizationTol = 1e-12;

template <class Real>
struct WeightEntry {
  VertexId u;
  VertexId v;
  Real w;
};

namespace detail {

template <class Real>
bool is_unit_total(const Real& total) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::abs(total - Real(1)) <= kNormalizationTol;
  } else {
    return total == Real(1);
  }
}

template <class Real>
bool is_finite_value(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::isfinite(x);
  } else {
    (void)x;
    return true;
  }
}

}  // namespace detail

/// Nonnegative symmetric edge weights on the complete graph K_n, stored
/// sparsely (absent pair = weight 0). Immutable after construction.
template <class Real>
class BasicWeightFunction {
 public:
  using Map = std::map<EdgeKey, Real>;

  BasicWeightFunction() = default;

  static BasicWeightFunction from_entries(int n, const std::vector<WeightEntry<Real>>& entries) {
    if (n < 2) fail(ErrorCode::vertex_out_of_range, "weight function needs n >= 2");
    BasicWeightFunction out;
    out.n_ = n;
    for (const auto& entry : entries) {
      if (entry.u == entry.v)
        fail(ErrorCode::self_loop, "self-loop weight at vertex " + std::to_string(entry.u));
      if (entry.u < 0 || entry.v < 0 || entry.u >= n || entry.v >= n)
        fail(ErrorCode::vertex_out_of_range,
             "weight endpoint outside [0," + std::to_string(n) + ")");
      if (!detail::is_finite_value(entry.w))
        fail(ErrorCode::non_finite_weight, "non-finite weight");
      if (entry.w < Real(0)) fail(ErrorCode::negative_weight, "negative weight");
      EdgeKey key(entry.u, entry.v);
      if (!out.w_.emplace(key, entry.w).second)
        fail(ErrorCode::duplicate_edge,
             "duplicate weight for edge (" + std::to_string(key.u) + "," +
                 std::to_string(key.v) + ")");
    }
    out.total_ = Real(0);
    for (const auto& [key, value] : out.w_) out.total_ += value;
    out.normalized_ = detail::is_unit_total(out.total_);
    return out;
  }

  int n() const { return n_; }
  bool normalized() const { return normalized_; }
  Real total() const { return total_; }
  const Map& entries() const { return w_; }

  Real value(VertexId u, VertexId v) const {
    auto it = w_.find(EdgeKey(u, v));
    return it == w_.end() ? Real(0) : it->second;
  }

  /// Number of edges with strictly positive weight.
  int support_size() const {
    int count = 0;
    for (const auto& [key, value] : w_)
      if (value > Real(0)) ++count;
    return count;
  }

  /// Copy with one weight replaced (validation as in from_entries).
  BasicWeightFunction with_value(VertexId u, VertexId v, Real w) const {
    std::vector<WeightEntry<Real>> entries;
    entries.reserve(w_.size() + 1);
    EdgeKey key(u, v);
    for (const auto& [k, value] : w_)
      if (!(k == key)) entries.push_back({k.u, k.v, value});
    entries.push_back({key.u, key.v, w});
    return from_entries(n_, entries);
  }

 private:
  int n_ = 0;
  Map w_;
  Real total_ = Real(0);
  bool normalized_ = false;
};

using WeightFunction = BasicWeightFunction<double>;
using RationalWeightFunction = BasicWeightFunction<Rational>;

template <class Real>
BasicWeightFunction<Real> make_weight_function(int n,
                                               const std::vector<WeightEntry<Real>>& entries) {
  return BasicWeightFunction<Real>::from_entries(n, entries);
}

/// Rescale so the total weight is exactly one unit of Real arithmetic.
template <class Real>
BasicWeightFunction<Real> normalize(const BasicWeightFunction<Real>& w) {
  Real total = w.total();
  if (!(total > Real(0))) fail(ErrorCode::zero_total_weight, "cannot normalize zero total weight");
  std::vector<WeightEntry<Real>> entries;
  entries.reserve(w.entries().size());
  for (const auto& [key, value] : w.entries()) entries.push_back({key.u, key.v, value / total});
  return BasicWeightFunction<Real>::from_entries(w.n(), entries);
}

/// Sum of w over the edges of G incident to v.
template <class Real>
Real weighted_degree(const BasicWeightFunction<Real>& w, const SimpleGraph& g, VertexId v) {
  if (!g.has_vertex(v))
    fail(ErrorCode::vertex_not_in_graph, "vertex " + std::to_string(v) + " not in graph");
  Real sum = Real(0);
  for (VertexId u : g.neighbors(v)) sum += w.value(u, v);
  return sum;
}

/// Weighted degree in the full host K_n.
template <class Real>
Real weighted_degree(const BasicWeightFunction<Real>& w, VertexId v) {
  if (v < 0 || v >= w.n())
    fail(ErrorCode::vertex_not_in_graph, "vertex " + std::to_string(v) + " not in host");
  Real sum = Real(0);
  for (const auto& [key, value] : w.entries())
    if (key.u == v || key.v == v) sum += value;
  return sum;
}

/// Sum of w over the edges of G.
template <class Real>
Real total_weight_in(const BasicWeightFunction<Real>& w, const SimpleGraph& g) {
  Real sum = Real(0);
  for (const auto& [key, value] : w.entries())
    if (g.has_edge(key.u, key.v)) sum += value;
  return sum;
}

}  // namespace cyclemax
