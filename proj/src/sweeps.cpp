#include "cyclemax/sweeps.hpp"

#include <cmath>
#include <sstream>

#include "cyclemax/certificates.hpp"
#include "cyclemax/cycles.hpp"
#include "cyclemax/random_weights.hpp"

namespace cyclemax {

namespace {

std::string case_tag(int index, int n, int k) {
  std::ostringstream os;
  os << "case " << index << " (n=" << n << ", k=" << k << ")";
  return os.str();
}

}  // namespace

SweepSummary identity_residual_sweep(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SweepSummary out{"identity", 0, 0.0, 1e-12, true, ""};
  for (int i = 0; i < count; ++i) {
    int n = rng.uniform_int(4, 9);
    int k = rng.uniform_int(3, n);
    WeightFunction w = random_weight_function(n, rng.next());
    double direct = cycle_sum(w, k).value;
    double via_identity = cycle_sum_via_identity(w, k);
    double scaled = std::abs(direct - via_identity) / std::max(1.0, direct);
    ++out.cases;
    if (scaled > out.worst) {
      out.worst = scaled;
      out.worst_detail = case_tag(i, n, k);
    }
  }
  out.pass = out.worst <= out.threshold;
  return out;
}

SweepSummary method_agreement_sweep(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SweepSummary out{"method-agreement", 0, 0.0, 1e-12, true, ""};
  for (int i = 0; i < count; ++i) {
    int n = rng.uniform_int(4, 9);
    int k = rng.uniform_int(3, n);
    WeightFunction w = random_weight_function(n, rng.next());
    double by_enum = cycle_sum(w, k, CycleSumMethod::enumeration).value;
    double by_dp = cycle_sum(w, k, CycleSumMethod::subset_dp).value;
    double scale = std::max(by_enum, by_dp);
    double rel = scale > 0.0 ? std::abs(by_enum - by_dp) / scale : std::abs(by_enum - by_dp);
    ++out.cases;
    if (rel > out.worst) {
      out.worst = rel;
      out.worst_detail = case_tag(i, n, k);
    }
  }
  out.pass = out.worst <= out.threshold;
  return out;
}

SweepSummary upper_bound_witness_sweep(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SweepSummary out{"upper-bound", 0, 0.0, 1e-12, true, ""};
  for (int i = 0; i < count; ++i) {
    int n = rng.uniform_int(6, 9);
    WeightFunction w = random_weight_function(n, rng.next());
    for (int k = 3; k <= 6; ++k) {
      double excess = cycle_sum(w, k).value - cycle_sum_upper_bound(k);
      ++out.cases;
      if (excess > out.worst) {
        out.worst = excess;
        out.worst_detail = case_tag(i, n, k);
      }
    }
  }
  out.pass = out.worst <= out.threshold;
  return out;
}

SweepSummary path_cap_sweep(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SweepSummary out{"path-cap", 0, 1.0, -1e-12, true, ""};
  for (int i = 0; i < count; ++i) {
    int n = rng.uniform_int(4, 8);
    WeightFunction w = random_weight_function(n, rng.next());
    for (int r = 2; r <= n; ++r)
      for (int v = 0; v < n; ++v) {
        double slack = path_sum_cap_slack(w, r, v);
        ++out.cases;
        if (slack < out.worst) {
          out.worst = slack;
          std::ostringstream os;
          os << "case " << i << " (n=" << n << ", r=" << r << ", v=" << v << ")";
          out.worst_detail = os.str();
        }
      }
  }
  out.pass = out.worst >= out.threshold;
  return out;
}

SweepSummary greedy_chain_sweep(int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SweepSummary out{"greedy-chain", 0, 1.0, -1e-12, true, ""};
  for (int i = 0; i < count; ++i) {
    int n = rng.uniform_int(4, 8);
    int r = rng.uniform_int(3, n);
    int v1 = rng.uniform_int(0, n - 1);
    int u = rng.uniform_int(0, n - 2);
    if (u >= v1) ++u;
    WeightFunction w = random_weight_function(n, rng.next());
    GreedyPathCertificate cert = greedy_path_bound(w, r, v1, u);
    for (const GreedyStep& step : cert.per_step) {
      ++out.cases;
      if (step.slack < out.worst) {
        out.worst = step.slack;
        std::ostringstream os;
        os << "case " << i << " (n=" << n << ", r=" << r << ", v1=" << v1 << ", u=" << u
           << ", t=" << step.t << ")";
        out.worst_detail = os.str();
      }
    }
  }
  out.pass = out.worst >= out.threshold;
  return out;
}

SweepSummary run_sweep_by_name(const std::string& what, int count, std::uint64_t seed) {
  if (what == "identity") return identity_residual_sweep(count, seed);
  if (what == "method-agreement") return method_agreement_sweep(count, seed);
  if (what == "upper-bound") return upper_bound_witness_sweep(count, seed);
  if (what == "path-cap") return path_cap_sweep(count, seed);
  if (what == "greedy-chain") return greedy_chain_sweep(count, seed);
  fail(ErrorCode::parse_error, "unknown sweep: " + what);
}

}  // namespace cyclemax
