#include "cyclemax/certificates.hpp"

#include <cmath>

#include "cyclemax/engine.hpp"

namespace cyclemax {

namespace {

double int_pow(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

GreedyPathCertificate greedy_path_bound(const WeightFunction& w, int r, VertexId v1, VertexId u) {
  const int n = w.n();
  if (v1 == u) fail(ErrorCode::identical_vertices, "sequence start and target must differ");
  if (v1 < 0 || u < 0 || v1 >= n || u >= n)
    fail(ErrorCode::vertex_not_in_graph, "sequence endpoints must lie in the host");
  if (r < 3 || r > n)
    fail(ErrorCode::bad_path_length, "sequence length " + std::to_string(r) + " out of range");

  WeightGrid<double> grid = WeightGrid<double>::from(w);
  GreedyPathCertificate cert;
  cert.r = r;
  cert.v1 = v1;
  cert.u = u;

  SimpleGraph g = SimpleGraph::complete(n).without_edge(EdgeKey(v1, u));
  const double lhs = path_sum(w, g, r, v1, u, &grid);

  double degree_product = 1.0;
  VertexId current = v1;
  for (int t = 1; t <= r - 1; ++t) {
    int ties = 1;
    if (t >= 2) {
      // G_t: vertices v1..v_{t-1} deleted (the missing edge from G_1 is
      // irrelevant once v1 is gone).
      g = (t == 2) ? SimpleGraph::complete(n).without_vertex(v1)
                   : g.without_vertex(current);
      VertexId best = -1;
      double best_f = -1.0;
      for (VertexId x : g.vertices()) {
        if (x == u) continue;
        double fx = path_sum(w, g, r - t + 1, x, u, &grid);
        if (fx > best_f) {
          best = x;
          best_f = fx;
          ties = 1;
        } else if (fx == best_f) {
          ++ties;
        }
      }
      current = best;
      cert.sequence.push_back(current);
    }
    double degree = weighted_degree(w, g, current);
    double f_value = path_sum(w, g, r - t + 1, current, u, &grid);
    double rhs = degree_product * f_value;
    cert.per_step.push_back({t, current, degree, f_value, lhs, rhs, rhs - lhs, ties});
    degree_product *= degree;
  }
  return cert;
}

double path_sum_cap_slack(const WeightFunction& w, int r, VertexId v) {
  const int n = w.n();
  if (v < 0 || v >= n) fail(ErrorCode::vertex_not_in_graph, "vertex not in host");
  if (r < 2 || r > n)
    fail(ErrorCode::bad_path_length, "path vertex count " + std::to_string(r) + " out of range");
  double f = path_sum_from(w, SimpleGraph::complete(n), r, v);
  double cap = int_pow(w.total() / (r - 1), r - 1);
  return cap - f;
}

BoundCertificate certify_bound(const WeightFunction& w, int k, double stationarity_tol) {
  const int n = w.n();
  if (!w.normalized()) fail(ErrorCode::not_normalized, "certificate expects a normalized input");
  if (k < 3 || k > n)
    fail(ErrorCode::bad_cycle_length, "cycle length " + std::to_string(k) + " out of range");

  // Maximum-weight edge; ties resolved toward the smallest pair.
  bool found = false;
  EdgeKey top(0, 1);
  double top_w = 0.0;
  for (const auto& [key, value] : w.entries()) {
    if (value > 0.0 && (!found || value > top_w)) {
      found = true;
      top = key;
      top_w = value;
    }
  }
  if (!found) fail(ErrorCode::empty_support, "certificate needs positive mass");

  BoundCertificate cert;
  cert.k = k;
  cert.v0 = top.u;
  cert.v1 = top.v;
  cert.bound = 1.0 / int_pow(static_cast<double>(k), k - 1);
  cert.greedy = greedy_path_bound(w, k, cert.v1, cert.v0);
  cert.mu = cert.greedy.per_step.front().lhs;
  cert.slack = cert.bound - cert.mu;

  StationarityReport stat = stationarity_check(w, k);
  cert.stationarity_deviation = stat.max_f_deviation;
  cert.stationary = stat.max_f_deviation <= stationarity_tol;

  // d_{G_i}(v_i) and prefix sums D_t.
  std::vector<double> degrees;
  degrees.reserve(cert.greedy.per_step.size());
  for (const auto& step : cert.greedy.per_step) degrees.push_back(step.degree);
  double running = 0.0;
  for (int t = 1; t <= k - 2; ++t) {
    running += degrees[static_cast<size_t>(t - 1)];
    cert.degree_prefix_sums.push_back(running);
  }

  // Cycle closed through the greedy sequence: v0, v1, v2, ..., v_{k-1}, v0.
  std::vector<VertexId> ring;
  ring.push_back(cert.v0);
  ring.push_back(cert.v1);
  for (VertexId v : cert.greedy.sequence) ring.push_back(v);
  for (size_t i = 0; i < ring.size(); ++i)
    cert.cycle_weights.push_back(w.value(ring[i], ring[(i + 1) % ring.size()]));

  const double case_eps = 1e-12;
  const double d_total = cert.degree_prefix_sums.back();
  const double case1_cap = static_cast<double>(k - 2) / k;
  auto push = [&cert](const std::string& name, double lhs, double rhs) {
    cert.chain.push_back({name, lhs, rhs, rhs - lhs});
  };

  WeightGrid<double> grid = WeightGrid<double>::from(w);

  if (d_total <= case1_cap + case_eps) {
    cert.case_id = 1;
    double degree_product = 1.0;
    for (int i = 0; i < k - 2; ++i) degree_product *= degrees[static_cast<size_t>(i)];
    double amgm = int_pow(d_total / (k - 2), k - 2);
    const GreedyStep& last = cert.greedy.per_step.back();  // t = k-1

    push("degree_sum_cap", d_total, case1_cap);
    push("amgm_product", degree_product, amgm);
    push("amgm_cap", amgm, int_pow(1.0 / k, k - 2));
    push("chain_bound", cert.mu, last.rhs);
    push("final_edge_cap", last.f_value, 1.0 / k);
    push("conclusion", cert.mu, cert.bound);

    cert.equality_case = true;
    for (double cw : cert.cycle_weights)
      if (std::abs(cw - 1.0 / k) > 1e-9) cert.equality_case = false;
  } else {
    cert.case_id = 2;
    int t = k - 2;
    for (int cand = 1; cand <= k - 2; ++cand) {
      if (cert.degree_prefix_sums[static_cast<size_t>(cand - 1)] >
          static_cast<double>(cand) / k + case_eps) {
        t = cand;
        break;
      }
    }
    cert.t = t;
    const double d_t = cert.degree_prefix_sums[static_cast<size_t>(t - 1)];
    push("threshold_exceeds", static_cast<double>(t) / k, d_t);

    double prefix_product = 1.0;
    for (int i = 0; i < t - 1; ++i) prefix_product *= degrees[static_cast<size_t>(i)];
    if (t >= 2) {
      const double d_prefix = cert.degree_prefix_sums[static_cast<size_t>(t - 2)];
      double amgm = int_pow(d_prefix / (t - 1), t - 1);
      push("threshold_minimality", d_prefix, static_cast<double>(t - 1) / k);
      push("amgm_prefix", prefix_product, amgm);
      push("prefix_cap", amgm, int_pow(1.0 / k, t - 1));
    }

    // Tail graph after deleting v1..v_t; v0 always survives.
    std::vector<VertexId> dropped;
    dropped.push_back(cert.v1);
    for (int i = 0; i < t - 1; ++i) dropped.push_back(cert.greedy.sequence[static_cast<size_t>(i)]);
    SimpleGraph tail = SimpleGraph::complete(n).without_vertices(dropped);

    const GreedyStep& step_t = cert.greedy.per_step[static_cast<size_t>(t - 1)];
    const VertexId v_t = step_t.vertex;
    const double f_t = step_t.f_value;  // f_{G_t}(k-t+1, v_t, v0)

    double expansion = 0.0;
    for (VertexId x : tail.vertices()) {
      if (x == cert.v0) continue;
      expansion += w.value(v_t, x) * path_sum(w, tail, k - t, x, cert.v0, &grid);
    }
    push("step_expansion", f_t, expansion);

    double tail_from_v0 = path_sum_from(w, tail, k - t, cert.v0, &grid);
    push("max_weight_factor", expansion, top_w * tail_from_v0);

    const double tail_mass = total_weight_in(w, tail);
    double tail_cap = int_pow(tail_mass / (k - t - 1), k - t - 1);
    push("tail_path_cap", tail_from_v0, tail_cap);
    push("amgm_merge", top_w * tail_cap, int_pow((top_w + tail_mass) / (k - t), k - t));
    push("mass_budget", top_w + tail_mass, 1.0 - d_t);
    push("budget_cap", 1.0 - d_t, static_cast<double>(k - t) / k);
    push("inner_cap", f_t, int_pow(1.0 / k, k - t));
    push("chain_bound", cert.mu, step_t.rhs);
    push("conclusion", cert.mu, cert.bound);
    cert.equality_case = false;
  }
  return cert;
}

}  // namespace cyclemax
