#include "cyclemax/exchange.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "cyclemax/engine.hpp"
#include "cyclemax/random_weights.hpp"

namespace cyclemax {

namespace {

constexpr double kSnapTol = 1e-14;   // weights below this are set to exact zero
constexpr double kMoveEps = 1e-15;   // minimum meaningful shift of the split point

struct PairCoeffs {
  double A = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;
};

// A, B1, B2 of the exchange quadratic, without the constant term. Cycles
// through an edge are u-v paths on k vertices between its endpoints, so all
// three come from anchored path enumerations instead of full cycle scans.
PairCoeffs pair_coefficients(const WeightGrid<double>& grid, int k, EdgeKey e1, EdgeKey e2) {
  PairCoeffs out;
  const EdgeKey req2[] = {e2};
  const EdgeKey forb1[] = {e1};
  const EdgeKey forb2[] = {e2};
  out.A = path_sum_constrained(grid, nullptr, k, e1.u, e1.v, req2, {});
  out.B1 = path_sum_constrained(grid, nullptr, k, e1.u, e1.v, {}, forb2);
  out.B2 = path_sum_constrained(grid, nullptr, k, e2.u, e2.v, {}, forb1);
  return out;
}

double split_point(double A, double B1, double B2, double c, double x) {
  if (A > 0.0) return std::clamp((A * c + B1 - B2) / (2.0 * A), 0.0, c);
  if (B1 > B2) return c;
  if (B1 < B2) return 0.0;
  return x;
}

double snap(double x) { return x < kSnapTol ? 0.0 : x; }

struct Candidate {
  bool eligible = false;
  double x_star = 0.0;
  double gain = 0.0;
  double deviation = 0.0;  // |f(e1) - f(e2)| when an improving move exists
  double f_scale = 0.0;
};

Candidate evaluate_pair(const WeightGrid<double>& grid, int k, EdgeKey e1, EdgeKey e2,
                        double dev_floor) {
  Candidate out;
  double x = grid.at(e1.u, e1.v);
  double c = x + grid.at(e2.u, e2.v);
  if (!(c > 0.0)) return out;
  PairCoeffs pc = pair_coefficients(grid, k, e1, e2);
  double f1 = pc.B1 + pc.A * (c - x);
  double f2 = pc.B2 + pc.A * x;
  out.f_scale = std::max(f1, f2);
  double x_star = split_point(pc.A, pc.B1, pc.B2, c, x);
  if (std::abs(x_star - x) <= kMoveEps) return out;
  // Exact for a quadratic: g(b)-g(a) = (b-a)*(g'(a)+g'(b))/2. Avoids the
  // cancellation of subtracting two nearly equal g values near stationarity.
  double slope_x = pc.A * (c - 2.0 * x) + pc.B1 - pc.B2;
  double slope_xs = pc.A * (c - 2.0 * x_star) + pc.B1 - pc.B2;
  double gain = 0.5 * (x_star - x) * (slope_x + slope_xs);
  if (!(gain > 0.0)) return out;
  out.deviation = std::abs(f1 - f2);
  if (out.deviation <= dev_floor) return out;
  out.eligible = true;
  out.x_star = x_star;
  out.gain = gain;
  return out;
}

// Zero-gain escape used only when no improving move exists anywhere: a pair
// of positive edges whose exchange line is exactly flat (no cycle through
// both, equal one-sided coefficients within the tolerance) can donate all
// mass to one side without changing the cycle sum, shrinking the support and
// unlocking further ascent from symmetric plateaus.
struct FlatMove {
  bool found = false;
  EdgeKey e1, e2;
  double x_star = 0.0;
};

FlatMove find_flat_move(const WeightGrid<double>& grid, int k,
                        const std::vector<EdgeKey>& edge_list, double flat_tol) {
  FlatMove out;
  for (size_t i = 0; i < edge_list.size(); ++i) {
    EdgeKey e1 = edge_list[i];
    double w1 = grid.at(e1.u, e1.v);
    if (!(w1 > 0.0)) continue;
    for (size_t j = i + 1; j < edge_list.size(); ++j) {
      EdgeKey e2 = edge_list[j];
      double w2 = grid.at(e2.u, e2.v);
      if (!(w2 > 0.0)) continue;
      PairCoeffs pc = pair_coefficients(grid, k, e1, e2);
      if (pc.A != 0.0) continue;
      if (std::abs(pc.B1 - pc.B2) > flat_tol) continue;
      out.found = true;
      out.e1 = e1;
      out.e2 = e2;
      out.x_star = pc.B1 >= pc.B2 ? (w1 + w2) : 0.0;
      return out;
    }
  }
  return out;
}

class ExchangeRun {
 public:
  ExchangeRun(const WeightFunction& w0, int k, const OptimizeConfig& config)
      : k_(k), config_(config), grid_(WeightGrid<double>::from(w0)), order_rng_(config.seed) {
    for (int u = 0; u < grid_.n; ++u)
      for (int v = u + 1; v < grid_.n; ++v) edge_list_.emplace_back(u, v);
    for (size_t i = 0; i < edge_list_.size(); ++i)
      for (size_t j = i + 1; j < edge_list_.size(); ++j) pair_order_.emplace_back(i, j);
    value_ = cycle_sum_subset_dp(grid_, k_);
  }

  std::pair<WeightFunction, OptimizationTrace> run() {
    switch (config_.strategy) {
      case PairStrategy::sweep:
        run_sweeps();
        break;
      case PairStrategy::greedy:
        run_greedy();
        break;
      case PairStrategy::random_pair:
        run_random();
        break;
    }
    finish();
    return {grid_.to_weight_function(), std::move(trace_)};
  }

 private:
  bool out_of_steps() const { return steps_ >= config_.max_steps; }

  void apply_move(EdgeKey e1, EdgeKey e2, double x_star) {
    double x = grid_.at(e1.u, e1.v);
    double c = x + grid_.at(e2.u, e2.v);
    grid_.set(e1.u, e1.v, snap(x_star));
    grid_.set(e2.u, e2.v, snap(c - x_star));
    value_ = cycle_sum_subset_dp(grid_, k_);
    ++steps_;
    trace_.steps.push_back({steps_, e1, e2, x, grid_.at(e1.u, e1.v), value_});
  }

  // One pass over all pairs in a freshly shuffled order; returns the number
  // of applied moves. The shuffle is seeded, so runs stay reproducible, and
  // it keeps first-improvement passes from herding the weights into the
  // symmetric saddle states a fixed scan order produces.
  int sweep_once(double dev_floor, double& f_scale_out) {
    for (size_t i = pair_order_.size(); i > 1; --i) {
      size_t j = order_rng_.next() % i;
      std::swap(pair_order_[i - 1], pair_order_[j]);
    }
    int moves = 0;
    double f_scale = 0.0;
    for (const auto& [i, j] : pair_order_) {
      if (out_of_steps()) break;
      Candidate cand = evaluate_pair(grid_, k_, edge_list_[i], edge_list_[j], dev_floor);
      f_scale = std::max(f_scale, cand.f_scale);
      if (cand.eligible) {
        apply_move(edge_list_[i], edge_list_[j], cand.x_star);
        ++moves;
      }
    }
    f_scale_out = f_scale;
    return moves;
  }

  // Stuck handler shared by all strategies: take one flat support-shrinking
  // move if available, otherwise settle the termination reason.
  bool escape_or_stop(double f_scale) {
    FlatMove flat = find_flat_move(grid_, k_, edge_list_, config_.tol * f_scale);
    if (flat.found && !out_of_steps()) {
      apply_move(flat.e1, flat.e2, flat.x_star);
      return true;
    }
    trace_.reason = steps_ == 0 ? TerminationReason::no_improving_pair
                                : TerminationReason::converged;
    return false;
  }

  void run_sweeps() {
    double f_scale_prev = 0.0;
    while (true) {
      if (out_of_steps()) {
        trace_.reason = TerminationReason::max_steps;
        return;
      }
      double f_scale = 0.0;
      int moves = sweep_once(config_.tol * f_scale_prev, f_scale);
      ++trace_.sweeps;
      f_scale_prev = f_scale;
      if (out_of_steps()) {
        trace_.reason = TerminationReason::max_steps;
        return;
      }
      if (moves == 0 && !escape_or_stop(f_scale)) return;
    }
  }

  void run_greedy() {
    double f_scale_prev = 0.0;
    while (true) {
      if (out_of_steps()) {
        trace_.reason = TerminationReason::max_steps;
        return;
      }
      double dev_floor = config_.tol * f_scale_prev;
      double f_scale = 0.0;
      Candidate best;
      EdgeKey best_e1, best_e2;
      for (size_t i = 0; i < edge_list_.size(); ++i)
        for (size_t j = i + 1; j < edge_list_.size(); ++j) {
          Candidate cand = evaluate_pair(grid_, k_, edge_list_[i], edge_list_[j], dev_floor);
          f_scale = std::max(f_scale, cand.f_scale);
          if (cand.eligible && cand.gain > best.gain) {
            best = cand;
            best_e1 = edge_list_[i];
            best_e2 = edge_list_[j];
          }
        }
      ++trace_.sweeps;
      f_scale_prev = f_scale;
      if (best.eligible) {
        apply_move(best_e1, best_e2, best.x_star);
      } else if (out_of_steps()) {
        trace_.reason = TerminationReason::max_steps;
        return;
      } else if (!escape_or_stop(f_scale)) {
        return;
      }
    }
  }

  void run_random() {
    SplitMix64 rng(config_.seed);
    const long long pair_count =
        static_cast<long long>(edge_list_.size()) * (static_cast<long long>(edge_list_.size()) - 1) / 2;
    long long failures = 0;
    double f_scale_prev = 0.0;
    while (!out_of_steps()) {
      size_t i = rng.next() % edge_list_.size();
      size_t j = rng.next() % edge_list_.size();
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      Candidate cand = evaluate_pair(grid_, k_, edge_list_[i], edge_list_[j],
                                     config_.tol * f_scale_prev);
      if (cand.eligible) {
        apply_move(edge_list_[i], edge_list_[j], cand.x_star);
        failures = 0;
        continue;
      }
      if (++failures < 4 * pair_count) continue;
      // Verify exhaustion with a full deterministic pass before stopping.
      double f_scale = 0.0;
      int moves = sweep_once(config_.tol * f_scale_prev, f_scale);
      ++trace_.sweeps;
      f_scale_prev = f_scale;
      failures = 0;
      if (out_of_steps()) break;
      if (moves == 0 && !escape_or_stop(f_scale)) return;
    }
    if (out_of_steps()) trace_.reason = TerminationReason::max_steps;
  }

  void finish() {
    double total = grid_.total();
    if (total > 0.0 && total != 1.0) {
      for (int u = 0; u < grid_.n; ++u)
        for (int v = u + 1; v < grid_.n; ++v)
          if (grid_.at(u, v) > 0.0) grid_.set(u, v, grid_.at(u, v) / total);
    }
    value_ = cycle_sum_subset_dp(grid_, k_);
    trace_.final_value = value_;
  }

  int k_;
  OptimizeConfig config_;
  WeightGrid<double> grid_;
  std::vector<EdgeKey> edge_list_;
  std::vector<std::pair<size_t, size_t>> pair_order_;
  OptimizationTrace trace_;
  double value_ = 0.0;
  long long steps_ = 0;
  SplitMix64 order_rng_;
};

}  // namespace

ExchangeCoefficients exchange_coefficients(const WeightFunction& w, int k, EdgeKey e1,
                                           EdgeKey e2) {
  if (e1 == e2) fail(ErrorCode::identical_edges, "exchange needs two distinct edges");
  if (k < 3 || k > w.n())
    fail(ErrorCode::bad_cycle_length, "cycle length " + std::to_string(k) + " out of range");
  if (e1.v >= w.n() || e2.v >= w.n() || e1.u < 0 || e2.u < 0)
    fail(ErrorCode::vertex_out_of_range, "exchange edge outside host");
  WeightGrid<double> grid = WeightGrid<double>::from(w);
  PairCoeffs pc = pair_coefficients(grid, k, e1, e2);
  ExchangeCoefficients out;
  out.A = pc.A;
  out.B1 = pc.B1;
  out.B2 = pc.B2;
  const EdgeKey both[] = {e1, e2};
  out.C = cycle_sum_enumeration(grid, k, {}, both);
  out.c = w.value(e1.u, e1.v) + w.value(e2.u, e2.v);
  out.x = w.value(e1.u, e1.v);
  out.e1 = e1;
  out.e2 = e2;
  return out;
}

SplitResult optimal_split(const ExchangeCoefficients& coeffs) {
  if (coeffs.c < 0.0) fail(ErrorCode::negative_mass, "combined mass must be nonnegative");
  SplitResult out;
  out.x_star = split_point(coeffs.A, coeffs.B1, coeffs.B2, coeffs.c, coeffs.x);
  out.g_at_x_star = coeffs.g(out.x_star);
  out.moved = out.x_star != coeffs.x;
  return out;
}

PairStrategy pair_strategy_from_string(const std::string& name) {
  if (name == "sweep") return PairStrategy::sweep;
  if (name == "greedy") return PairStrategy::greedy;
  if (name == "random") return PairStrategy::random_pair;
  fail(ErrorCode::parse_error, "unknown pair strategy: " + name);
}

std::string to_string(PairStrategy strategy) {
  switch (strategy) {
    case PairStrategy::sweep:
      return "sweep";
    case PairStrategy::greedy:
      return "greedy";
    case PairStrategy::random_pair:
      return "random";
  }
  return "unknown";
}

std::string to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::converged:
      return "converged";
    case TerminationReason::max_steps:
      return "max-steps";
    case TerminationReason::no_improving_pair:
      return "no-improving-pair";
  }
  return "unknown";
}

std::pair<WeightFunction, OptimizationTrace> optimize(const WeightFunction& w0, int k,
                                                      const OptimizeConfig& config) {
  if (!w0.normalized()) fail(ErrorCode::not_normalized, "optimize expects a normalized input");
  if (k < 3 || k > w0.n())
    fail(ErrorCode::bad_cycle_length, "cycle length " + std::to_string(k) + " out of range");
  ExchangeRun run(w0, k, config);
  return run.run();
}

StationarityReport stationarity_check(const WeightFunction& w, int k, double tol) {
  if (!w.normalized())
    fail(ErrorCode::not_normalized, "stationarity check expects a normalized input");
  if (k < 3 || k > w.n())
    fail(ErrorCode::bad_cycle_length, "cycle length " + std::to_string(k) + " out of range");
  WeightGrid<double> grid = WeightGrid<double>::from(w);
  SimpleGraph host = SimpleGraph::complete(w.n());

  StationarityReport report;
  report.k = k;
  report.support_tol = tol;

  std::vector<double> f_values;
  for (const auto& [key, value] : w.entries()) {
    report.max_weight = std::max(report.max_weight, value);
    if (value > tol) {
      f_values.push_back(path_sum(w, host, k, key.u, key.v, &grid));
      ++report.support_edges;
    }
  }
  if (f_values.empty()) fail(ErrorCode::empty_support, "no edge weight above tolerance");

  double sum = 0.0;
  for (double f : f_values) sum += f;
  report.f_mean = sum / static_cast<double>(f_values.size());
  for (double f : f_values)
    report.max_f_deviation = std::max(report.max_f_deviation, std::abs(f - report.f_mean));
  report.cycle_sum = cycle_sum(w, k).value;
  report.identity_residual = std::abs(report.cycle_sum - report.f_mean / k);
  return report;
}

std::vector<RestartResult> optimize_multistart(int n, int k, int restarts, std::uint64_t seed,
                                               const OptimizeConfig& config) {
  if (restarts < 1) fail(ErrorCode::vertex_out_of_range, "restarts must be >= 1");
  if (k < 3 || k > n)
    fail(ErrorCode::bad_cycle_length, "cycle length " + std::to_string(k) + " out of range");
  std::vector<RestartResult> results(static_cast<size_t>(restarts));
  std::atomic<int> next{0};
  int workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, restarts);

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&]() {
    try {
      for (int i = next.fetch_add(1); i < restarts; i = next.fetch_add(1)) {
        std::uint64_t run_seed = restart_seed(seed, i);
        WeightFunction start = random_start_weights(n, run_seed);
        OptimizeConfig cfg = config;
        cfg.seed = run_seed + 1;
        auto [best, trace] = optimize(start, k, cfg);
        results[static_cast<size_t>(i)] = {i, run_seed, std::move(best), std::move(trace)};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

int best_restart_index(const std::vector<RestartResult>& results) {
  int best = 0;
  for (size_t i = 1; i < results.size(); ++i)
    if (results[i].trace.final_value > results[best].trace.final_value)
      best = static_cast<int>(i);
  return best;
}

}  // namespace cyclemax
