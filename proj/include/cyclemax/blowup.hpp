#pragma once

#include <string>
#include <vector>

#include "cyclemax/graph.hpp"

namespace cyclemax {

/// Even cycle with every second vertex blown up: hubs a_1..a_k keep their
/// labels 0..k-1, and the remaining n-k vertices split into balanced
/// independent classes B_1..B_k, every vertex of B_i adjacent exactly to
/// a_i and a_{i+1 mod k}. Planar by construction (classes drawn as nested
/// fans between consecutive hubs).
struct BlowupConstruction {
  int n = 0;
  int k = 0;
  std::vector<VertexId> hubs;
  std::vector<std::vector<VertexId>> classes;
  SimpleGraph graph;

  std::vector<int> class_sizes() const {
    std::vector<int> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) out.push_back(static_cast<int>(cls.size()));
    return out;
  }
};

BlowupConstruction build_blowup(int n, int k);

/// Product of the class sizes: the closed-form number of 2k-cycle subgraphs
/// of the construction (each such cycle uses all k hubs and one vertex per
/// class).
long long closed_form_count(int n, int k);

/// closed_form_count(n, k) / (n^k / k^k); approaches 1 from below as n
/// grows with k fixed.
double asymptotic_ratio(int n, int k);

/// Human-readable description of the planar embedding.
std::string embedding_description(const BlowupConstruction& b);

}  // namespace cyclemax
