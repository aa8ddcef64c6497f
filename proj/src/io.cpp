#include "cyclemax/io.hpp"

#include <fstream>
#include <sstream>

namespace cyclemax {

Json weight_to_json(const WeightFunction& w) {
  Json edges = Json::array();
  for (const auto& [key, value] : w.entries())
    edges.push_back({{"u", key.u}, {"v", key.v}, {"w", value}});
  return Json{{"n", w.n()}, {"normalized", w.normalized()}, {"edges", edges}};
}

WeightFunction weight_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<WeightEntry<double>> entries;
    for (const auto& edge : j.at("edges")) {
      entries.push_back({edge.at("u").get<int>(), edge.at("v").get<int>(),
                         edge.at("w").get<double>()});
    }
    return WeightFunction::from_entries(n, entries);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, std::string("bad weight JSON: ") + e.what());
  }
}

WeightFunction read_weight_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse_error, std::string("cannot parse ") + path.string() + ": " + e.what());
  }
  return weight_from_json(j);
}

void write_weight_file(const std::filesystem::path& path, const WeightFunction& w) {
  write_text_file(path, weight_to_json(w).dump(2) + "\n");
}

std::string graph_to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.vertex_bound() << " " << g.edge_count() << "\n";
  for (const EdgeKey& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

SimpleGraph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) fail(ErrorCode::parse_error, "edge list: missing 'n m' header");
  std::vector<EdgeKey> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) fail(ErrorCode::parse_error, "edge list: truncated edge lines");
    if (u == v) fail(ErrorCode::parse_error, "edge list: self-loop");
    edges.emplace_back(u, v);
  }
  return SimpleGraph(n, edges);
}

std::string trace_to_csv(const OptimizationTrace& trace) {
  std::ostringstream os;
  os << "step,e1_u,e1_v,e2_u,e2_v,x_before,x_after,beta\n";
  os.precision(17);
  for (const TraceStep& s : trace.steps)
    os << s.step << "," << s.e1.u << "," << s.e1.v << "," << s.e2.u << "," << s.e2.v << ","
       << s.x_before << "," << s.x_after << "," << s.value_after << "\n";
  return os.str();
}

Json stationarity_to_json(const StationarityReport& report) {
  return Json{{"k", report.k},
              {"f_mean", report.f_mean},
              {"max_f_deviation", report.max_f_deviation},
              {"max_weight", report.max_weight},
              {"cycle_sum", report.cycle_sum},
              {"identity_residual", report.identity_residual},
              {"support_tol", report.support_tol},
              {"support_edges", report.support_edges}};
}

Json greedy_to_json(const GreedyPathCertificate& cert) {
  Json steps = Json::array();
  for (const GreedyStep& s : cert.per_step)
    steps.push_back({{"t", s.t},
                     {"vertex", s.vertex},
                     {"degree", s.degree},
                     {"f_value", s.f_value},
                     {"lhs", s.lhs},
                     {"rhs", s.rhs},
                     {"slack", s.slack},
                     {"ties", s.ties}});
  return Json{{"r", cert.r},
              {"v1", cert.v1},
              {"u", cert.u},
              {"sequence", cert.sequence},
              {"per_step", steps}};
}

Json certificate_to_json(const BoundCertificate& cert) {
  Json chain = Json::array();
  for (const InequalityRecord& rec : cert.chain)
    chain.push_back({{"name", rec.name}, {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"slack", rec.slack}});
  Json out{{"k", cert.k},
           {"v0", cert.v0},
           {"v1", cert.v1},
           {"case", cert.case_id},
           {"degree_prefix_sums", cert.degree_prefix_sums},
           {"greedy", greedy_to_json(cert.greedy)},
           {"chain", chain},
           {"mu", cert.mu},
           {"bound", cert.bound},
           {"slack", cert.slack},
           {"stationary", cert.stationary},
           {"stationarity_deviation", cert.stationarity_deviation},
           {"equality_case", cert.equality_case},
           {"cycle_weights", cert.cycle_weights}};
  if (cert.t) out["t"] = *cert.t;
  return out;
}

Json blowup_metadata(const BlowupConstruction& b) {
  return Json{{"n", b.n},
              {"k", b.k},
              {"hub_ids", b.hubs},
              {"class_sizes", b.class_sizes()},
              {"edge_count", b.graph.edge_count()},
              {"closed_form_count", closed_form_count(b.n, b.k)}};
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) fail(ErrorCode::parse_error, "cannot write " + path.string());
  out << text;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cyclemax
