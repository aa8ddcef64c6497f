#pragma once

#include <span>
#include <string>

#include "cyclemax/engine.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/weight.hpp"

namespace cyclemax {

enum class CycleSumMethod { enumeration, subset_dp, identity };

std::string to_string(CycleSumMethod method);

struct CycleSumValue {
  int k = 0;
  double value = 0.0;
  CycleSumMethod method = CycleSumMethod::enumeration;
};

/// Sum over all k-cycle subgraphs of K_n of the product of their edge
/// weights. The default picks the subset engine when the support is small
/// enough and falls back to enumeration otherwise.
CycleSumValue cycle_sum(const WeightFunction& w, int k);
CycleSumValue cycle_sum(const WeightFunction& w, int k, CycleSumMethod method);

/// Same value computed through the edge/path decomposition: every k-cycle
/// splits into an edge uv and a u-v path on k vertices, so summing
/// w(uv) * path_sum(k, u, v) over edges counts each cycle k times.
double cycle_sum_via_identity(const WeightFunction& w, int k);

/// Generic-scalar entry points used by the exact-arithmetic checks.
template <class Real>
Real cycle_sum_as(const BasicWeightFunction<Real>& w, int k, CycleSumMethod method) {
  if (k < 3 || k > w.n())
    fail(ErrorCode::bad_cycle_length,
         "cycle length " + std::to_string(k) + " out of range [3," + std::to_string(w.n()) + "]");
  WeightGrid<Real> grid = WeightGrid<Real>::from(w);
  switch (method) {
    case CycleSumMethod::enumeration:
      return cycle_sum_enumeration(grid, k);
    case CycleSumMethod::subset_dp:
      return cycle_sum_subset_dp(grid, k);
    case CycleSumMethod::identity: {
      SimpleGraph host = SimpleGraph::complete(w.n());
      Real sum = Real(0);
      for (const auto& [key, value] : w.entries()) {
        if (!(value > Real(0))) continue;
        sum += value * path_sum(w, host, k, key.u, key.v, &grid);
      }
      return sum / Real(k);
    }
  }
  fail(ErrorCode::internal_error, "unknown cycle sum method");
}

/// Cycle weight sum restricted to cycles through every `required` edge and
/// avoiding every `forbidden` edge; required edges contribute factor one.
double cycle_sum_with_constraints(const WeightFunction& w, int k,
                                  std::span<const EdgeKey> required,
                                  std::span<const EdgeKey> forbidden);

/// The simplex optimum 1/k^k used as reference value in reports and tests.
double cycle_sum_upper_bound(int k);

}  // namespace cyclemax
