#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cyclemax/blowup.hpp"
#include "cyclemax/certificates.hpp"
#include "cyclemax/exchange.hpp"
#include "cyclemax/weight.hpp"

namespace cyclemax {

using Json = nlohmann::json;

// {"n": int, "normalized": bool, "edges": [{"u": int, "v": int, "w": float}, ...]}, u < v.
Json weight_to_json(const WeightFunction& w);
WeightFunction weight_from_json(const Json& j);

WeightFunction read_weight_file(const std::filesystem::path& path);
void write_weight_file(const std::filesystem::path& path, const WeightFunction& w);

// First line "n m", then one "u v" line per edge, 0-indexed.
std::string graph_to_edge_list(const SimpleGraph& g);
SimpleGraph graph_from_edge_list(const std::string& text);

// "step,e1_u,e1_v,e2_u,e2_v,x_before,x_after,beta" rows.
std::string trace_to_csv(const OptimizationTrace& trace);

Json stationarity_to_json(const StationarityReport& report);
Json greedy_to_json(const GreedyPathCertificate& cert);
Json certificate_to_json(const BoundCertificate& cert);
Json blowup_metadata(const BlowupConstruction& b);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace cyclemax
