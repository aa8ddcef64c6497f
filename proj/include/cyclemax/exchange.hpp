#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclemax/cycles.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/weight.hpp"

namespace cyclemax {

/// Coefficients of the cycle weight sum seen as a function of how the
/// combined mass c = w(e1) + w(e2) is split between the two edges:
///
///   g(x) = A*x*(c-x) + B1*x + B2*(c-x) + C,   x = mass on e1.
///
/// A sums cycles through both edges, B1/B2 cycles through exactly one,
/// C cycles through neither; each with the weights of e1 and e2 factored
/// out of the product, so the coefficients are well defined at weight zero.
struct ExchangeCoefficients {
  double A = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;
  double C = 0.0;
  double c = 0.0;  // combined mass w(e1) + w(e2)
  double x = 0.0;  // current w(e1)
  EdgeKey e1;
  EdgeKey e2;

  double g(double at) const { return A * at * (c - at) + B1 * at + B2 * (c - at) + C; }
};

ExchangeCoefficients exchange_coefficients(const WeightFunction& w, int k, EdgeKey e1, EdgeKey e2);

struct SplitResult {
  double x_star = 0.0;
  double g_at_x_star = 0.0;
  bool moved = false;  // false when the flat tie-break keeps the current split
};

/// Maximizer of the concave quadratic g over [0, c]. Flat directions
/// (A = 0, B1 = B2) keep the current split.
SplitResult optimal_split(const ExchangeCoefficients& coeffs);

enum class PairStrategy { sweep, greedy, random_pair };

PairStrategy pair_strategy_from_string(const std::string& name);
std::string to_string(PairStrategy strategy);

struct OptimizeConfig {
  long long max_steps = 1'000'000;
  double tol = 1e-12;
  PairStrategy strategy = PairStrategy::sweep;
  std::uint64_t seed = 0;  // used by the random_pair strategy
};

enum class TerminationReason { converged, max_steps, no_improving_pair };

std::string to_string(TerminationReason reason);

struct TraceStep {
  long long step = 0;
  EdgeKey e1;
  EdgeKey e2;
  double x_before = 0.0;
  double x_after = 0.0;
  double value_after = 0.0;  // cycle sum after the move
};

struct OptimizationTrace {
  std::vector<TraceStep> steps;
  TerminationReason reason = TerminationReason::converged;
  int sweeps = 0;
  double final_value = 0.0;
};

/// Coordinate-exchange ascent over the edge-weight simplex: repeatedly
/// redistributes the combined mass of an edge pair to the closed-form
/// optimum of g. The cycle sum never decreases and the total mass is
/// conserved; the returned weight function is normalized with weights
/// below 1e-14 snapped to zero.
std::pair<WeightFunction, OptimizationTrace> optimize(const WeightFunction& w0, int k,
                                                      const OptimizeConfig& config = {});

struct StationarityReport {
  int k = 0;
  double f_mean = 0.0;          // mean path-sum value over support edges
  double max_f_deviation = 0.0;  // max |f - f_mean| over support edges
  double max_weight = 0.0;
  double cycle_sum = 0.0;
  double identity_residual = 0.0;  // |cycle_sum - f_mean/k|
  double support_tol = 0.0;
  int support_edges = 0;
};

/// First-order certificate: at an exchange-stationary point all support
/// edges share the same terminal-pair path-sum value f, every weight is at
/// most 1/k, and the cycle sum equals f_mean/k.
StationarityReport stationarity_check(const WeightFunction& w, int k, double tol = 1e-12);

struct RestartResult {
  int restart_index = 0;
  std::uint64_t seed = 0;
  WeightFunction weights;
  OptimizationTrace trace;
};

/// Seeded multi-start wrapper; results ordered by restart index, best first
/// determined by final value (ties: lower index).
std::vector<RestartResult> optimize_multistart(int n, int k, int restarts, std::uint64_t seed,
                                               const OptimizeConfig& config = {});

int best_restart_index(const std::vector<RestartResult>& results);

}  // namespace cyclemax
