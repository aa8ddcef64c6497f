#pragma once

#include <cstdint>
#include <string>

namespace cyclemax {

/// Outcome of one randomized property sweep. `worst` is the extreme value
/// of the checked quantity across all cases: a maximum residual for the
/// agreement sweeps, a minimum slack for the bound sweeps.
struct SweepSummary {
  std::string what;
  int cases = 0;
  double worst = 0.0;
  double threshold = 0.0;
  bool pass = true;
  std::string worst_detail;
};

/// |cycle_sum - cycle_sum_via_identity| <= 1e-12 * max(1, value) on random
/// normalized weights, n in [4,9], k in [3,n].
SweepSummary identity_residual_sweep(int count, std::uint64_t seed);

/// Enumeration and subset engines agree within 1e-12 relative.
SweepSummary method_agreement_sweep(int count, std::uint64_t seed);

/// cycle_sum <= 1/k^k + 1e-12 for k in [3,6] on random normalized weights.
SweepSummary upper_bound_witness_sweep(int count, std::uint64_t seed);

/// path_sum_cap_slack >= -1e-12 over all valid (r, v), n in [4,8].
SweepSummary path_cap_sweep(int count, std::uint64_t seed);

/// Greedy chain certificates: every per-step slack >= -1e-12 on random
/// (r, v1, u), n in [4,8].
SweepSummary greedy_chain_sweep(int count, std::uint64_t seed);

SweepSummary run_sweep_by_name(const std::string& what, int count, std::uint64_t seed);

}  // namespace cyclemax
