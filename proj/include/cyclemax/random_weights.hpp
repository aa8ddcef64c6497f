#pragma once

#include <cstdint>
#include <vector>

#include "cyclemax/weight.hpp"

namespace cyclemax {

/// Deterministic stream independent of the standard library's distribution
/// implementations, so seeded runs reproduce bit-for-bit everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Independent uniform [0,1) weight on every edge of K_n, then normalized.
inline WeightFunction random_weight_function(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<WeightEntry<double>> entries;
  entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) entries.push_back({u, v, rng.uniform01()});
  return normalize(WeightFunction::from_entries(n, entries));
}

/// Random start for the exchange optimizer: every edge keeps positive mass,
/// but the uniform draw is raised to a fixed power so the start is already
/// spread across scales. Plain uniform starts sit next to the all-equal
/// weight state, whose basin under pairwise exchange is a symmetric saddle
/// (all path-sum values equal) that the ascent cannot leave; sharpened
/// starts avoid that basin without biasing any particular support.
inline WeightFunction random_start_weights(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<WeightEntry<double>> entries;
  entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double x = rng.uniform01();
      double x2 = x * x;
      double x4 = x2 * x2;
      entries.push_back({u, v, x4 * x4});
    }
  return normalize(WeightFunction::from_entries(n, entries));
}

/// Weight 1/k on the edges of the cycle 0-1-...-(k-1)-0 inside K_n.
inline WeightFunction uniform_cycle_weights(int n, int k) {
  std::vector<WeightEntry<double>> entries;
  for (int v = 0; v < k; ++v) {
    EdgeKey e(v, (v + 1) % k);
    entries.push_back({e.u, e.v, 1.0 / k});
  }
  return WeightFunction::from_entries(n, entries);
}

/// Exact-rational twin of uniform_cycle_weights.
inline RationalWeightFunction uniform_cycle_weights_exact(int n, int k) {
  std::vector<WeightEntry<Rational>> entries;
  for (int v = 0; v < k; ++v) {
    EdgeKey e(v, (v + 1) % k);
    entries.push_back({e.u, e.v, Rational(1) / k});
  }
  return RationalWeightFunction::from_entries(n, entries);
}

/// Uniform weight on every edge of K_n.
inline WeightFunction uniform_complete_weights(int n) {
  const int m = n * (n - 1) / 2;
  std::vector<WeightEntry<double>> entries;
  entries.reserve(static_cast<size_t>(m));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) entries.push_back({u, v, 1.0 / m});
  return WeightFunction::from_entries(n, entries);
}

/// Random rational weights with denominators up to `denom`, normalized
/// exactly. Used by the drift-free engine cross-checks.
inline RationalWeightFunction random_rational_weights(int n, std::uint64_t seed, int denom = 64) {
  SplitMix64 rng(seed);
  std::vector<WeightEntry<Rational>> entries;
  Rational total = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Rational value(rng.uniform_int(0, denom), denom);
      entries.push_back({u, v, value});
      total += value;
    }
  if (total == 0) entries[0].w = total = 1;
  for (auto& entry : entries) entry.w /= total;
  return RationalWeightFunction::from_entries(n, entries);
}

/// Derives the per-restart seed from a base seed.
inline std::uint64_t restart_seed(std::uint64_t base, int restart_index) {
  SplitMix64 rng(base + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart_index + 1));
  return rng.next();
}

}  // namespace cyclemax
