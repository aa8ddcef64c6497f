#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclemax/exchange.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/weight.hpp"

namespace cyclemax {

struct GreedyStep {
  int t = 0;
  VertexId vertex = 0;    // v_t
  double degree = 0.0;    // weighted degree of v_t in G_t
  double f_value = 0.0;   // path sum from v_t to u on r-t+1 vertices in G_t
  double lhs = 0.0;       // path sum from v_1 to u on r vertices in G_1
  double rhs = 0.0;       // degree product times f_value
  double slack = 0.0;     // rhs - lhs
  int ties = 1;           // argmax candidates at this step (smallest id wins)
};

/// Greedy vertex sequence certificate: starting from v1, each step deletes
/// the previous vertex and picks the next one maximizing the remaining path
/// sum toward u, recording the chain inequality
///
///   f_{G1}(r, v1, u) <= d_{G1}(v1) ... d_{G_{t-1}}(v_{t-1}) f_{G_t}(r-t+1, v_t, u)
///
/// for every t, where G1 is K_n minus the edge v1-u and G_t drops the
/// vertices chosen so far. u itself is never deleted or selected.
struct GreedyPathCertificate {
  int r = 0;
  VertexId v1 = 0;
  VertexId u = 0;
  std::vector<VertexId> sequence;    // v2 .. v_{r-1}
  std::vector<GreedyStep> per_step;  // t = 1 .. r-1
};

GreedyPathCertificate greedy_path_bound(const WeightFunction& w, int r, VertexId v1, VertexId u);

/// Slack of the rooted path-sum cap f(r, v) <= (W/(r-1))^(r-1) where W is
/// the total weight; nonnegative for every nonnegative weight function.
double path_sum_cap_slack(const WeightFunction& w, int r, VertexId v);

struct InequalityRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

/// Certificate that the common stationary path-sum level mu (evaluated as
/// the path sum between the endpoints of the heaviest edge) stays below
/// 1/k^(k-1), following the two-case degree-budget argument. Every
/// intermediate inequality is recorded with its own slack.
struct BoundCertificate {
  int k = 0;
  VertexId v0 = 0;  // endpoints of the maximum-weight edge, v0 < v1
  VertexId v1 = 0;
  int case_id = 1;
  std::optional<int> t;                    // case 2 threshold index
  std::vector<double> degree_prefix_sums;  // D_1 .. D_{k-2}
  GreedyPathCertificate greedy;
  std::vector<InequalityRecord> chain;
  double mu = 0.0;
  double bound = 0.0;  // 1/k^(k-1)
  double slack = 0.0;  // bound - mu
  bool stationary = false;
  double stationarity_deviation = 0.0;
  bool equality_case = false;
  std::vector<double> cycle_weights;  // w(v0,v1), w(v1,v2), ..., w(v_{k-1},v0)
};

/// Advisory on non-stationary inputs: the certificate is still computed and
/// the `stationary` flag reports whether the first-order check passed.
BoundCertificate certify_bound(const WeightFunction& w, int k, double stationarity_tol = 1e-6);

}  // namespace cyclemax
