#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclemax/blowup.hpp"
#include "cyclemax/certificates.hpp"
#include "cyclemax/cycles.hpp"
#include "cyclemax/engine.hpp"
#include "cyclemax/exchange.hpp"
#include "cyclemax/io.hpp"
#include "cyclemax/random_weights.hpp"
#include "cyclemax/sweeps.hpp"

namespace {

using cyclemax::Json;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
  return buf;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << "," << j.dump() << "\n";
  }
}

void emit(const Json& j, const std::string& format) {
  if (format == "csv") {
    flatten(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct CommonOpts {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol = 1e-12;
  long long max_steps = 1'000'000;
  std::string strategy = "sweep";
  std::string in_path;
  std::string out_dir;
  std::string format = "json";
  bool f_table = false;
  std::string sweep_what = "identity";
  int sweep_count = 200;
};

int cmd_eval(const CommonOpts& opt) {
  cyclemax::WeightFunction w = cyclemax::read_weight_file(opt.in_path);
  int k = opt.k;
  double by_enum = cyclemax::cycle_sum(w, k, cyclemax::CycleSumMethod::enumeration).value;
  double by_dp = cyclemax::cycle_sum(w, k, cyclemax::CycleSumMethod::subset_dp).value;
  double by_identity = cyclemax::cycle_sum_via_identity(w, k);
  Json out{{"command", "eval"},
           {"n", w.n()},
           {"k", k},
           {"normalized", w.normalized()},
           {"total", w.total()},
           {"cycle_sum",
            Json{{"enumeration", by_enum}, {"subset_dp", by_dp}, {"identity", by_identity}}},
           {"residual_identity", std::abs(by_enum - by_identity)},
           {"residual_methods", std::abs(by_enum - by_dp)},
           {"reference_upper_bound", cyclemax::cycle_sum_upper_bound(k)},
           {"timestamp", iso_timestamp()}};
  if (opt.f_table) {
    cyclemax::WeightGrid<double> grid = cyclemax::WeightGrid<double>::from(w);
    cyclemax::SimpleGraph host = cyclemax::SimpleGraph::complete(w.n());
    Json table = Json::array();
    for (const auto& [key, value] : w.entries()) {
      if (!(value > 0.0)) continue;
      table.push_back({{"u", key.u},
                       {"v", key.v},
                       {"w", value},
                       {"f", cyclemax::path_sum(w, host, k, key.u, key.v, &grid)}});
    }
    out["f_table"] = table;
  }
  emit(out, opt.format);
  return 0;
}

int cmd_optimize(const CommonOpts& opt) {
  cyclemax::OptimizeConfig config;
  config.tol = opt.tol;
  config.max_steps = opt.max_steps;
  config.strategy = cyclemax::pair_strategy_from_string(opt.strategy);
  auto results = cyclemax::optimize_multistart(opt.n, opt.k, opt.restarts, opt.seed, config);
  int best = cyclemax::best_restart_index(results);
  const cyclemax::RestartResult& winner = results[static_cast<size_t>(best)];

  cyclemax::StationarityReport stat = cyclemax::stationarity_check(winner.weights, opt.k);
  cyclemax::BoundCertificate cert = cyclemax::certify_bound(winner.weights, opt.k);

  Json detail = Json::array();
  for (const auto& r : results)
    detail.push_back({{"index", r.restart_index},
                      {"seed", r.seed},
                      {"value", r.trace.final_value},
                      {"reason", cyclemax::to_string(r.trace.reason)},
                      {"steps", r.trace.steps.size()},
                      {"sweeps", r.trace.sweeps}});
  Json summary{{"command", "optimize"},
               {"n", opt.n},
               {"k", opt.k},
               {"restarts", opt.restarts},
               {"seed", opt.seed},
               {"tol", opt.tol},
               {"strategy", opt.strategy},
               {"best_restart", best},
               {"best_value", winner.trace.final_value},
               {"reference_upper_bound", cyclemax::cycle_sum_upper_bound(opt.k)},
               {"restart_details", detail},
               {"stationarity", cyclemax::stationarity_to_json(stat)},
               {"certificate_slack", cert.slack},
               {"timestamp", iso_timestamp()}};

  if (!opt.out_dir.empty()) {
    std::filesystem::path dir(opt.out_dir);
    cyclemax::write_weight_file(dir / "best_weights.json", winner.weights);
    cyclemax::write_text_file(dir / "trace.csv", cyclemax::trace_to_csv(winner.trace));
    cyclemax::write_text_file(dir / "stationarity.json",
                              cyclemax::stationarity_to_json(stat).dump(2) + "\n");
    cyclemax::write_text_file(dir / "certificate.json",
                              cyclemax::certificate_to_json(cert).dump(2) + "\n");
    cyclemax::write_text_file(dir / "summary.json", summary.dump(2) + "\n");
  }
  emit(summary, opt.format);
  return 0;
}

int cmd_certify(const CommonOpts& opt) {
  cyclemax::WeightFunction w = cyclemax::read_weight_file(opt.in_path);
  cyclemax::StationarityReport stat = cyclemax::stationarity_check(w, opt.k, opt.tol);
  cyclemax::BoundCertificate cert = cyclemax::certify_bound(w, opt.k);
  Json out{{"command", "certify"},
           {"k", opt.k},
           {"stationarity", cyclemax::stationarity_to_json(stat)},
           {"certificate", cyclemax::certificate_to_json(cert)},
           {"timestamp", iso_timestamp()}};
  if (!opt.out_dir.empty()) {
    std::filesystem::path dir(opt.out_dir);
    cyclemax::write_text_file(dir / "stationarity.json",
                              cyclemax::stationarity_to_json(stat).dump(2) + "\n");
    cyclemax::write_text_file(dir / "certificate.json",
                              cyclemax::certificate_to_json(cert).dump(2) + "\n");
  }
  emit(out, opt.format);
  return 0;
}

int cmd_construct(const CommonOpts& opt) {
  cyclemax::BlowupConstruction b = cyclemax::build_blowup(opt.n, opt.k);
  Json meta = cyclemax::blowup_metadata(b);
  meta["command"] = "construct";
  meta["embedding"] = cyclemax::embedding_description(b);
  if (opt.n <= 14) {
    meta["brute_force_count"] = cyclemax::count_cycles(b.graph, 2 * opt.k);
  } else {
    meta["brute_force_count"] = nullptr;
    meta["notice"] = "brute-force counting disabled above n = 14";
  }
  Json ratios = Json::array();
  for (int scale = 1; scale <= 100; scale *= 10) {
    long long nn = static_cast<long long>(opt.n) * scale;
    ratios.push_back({{"n", nn},
                      {"ratio", cyclemax::asymptotic_ratio(static_cast<int>(nn), opt.k)}});
  }
  meta["ratio_table"] = ratios;
  meta["timestamp"] = iso_timestamp();
  if (!opt.out_dir.empty()) {
    std::filesystem::path dir(opt.out_dir);
    cyclemax::write_text_file(dir / "graph.txt", cyclemax::graph_to_edge_list(b.graph));
    cyclemax::write_text_file(dir / "metadata.json", meta.dump(2) + "\n");
  }
  emit(meta, opt.format);
  return 0;
}

int cmd_sweep(const CommonOpts& opt) {
  cyclemax::SweepSummary summary =
      cyclemax::run_sweep_by_name(opt.sweep_what, opt.sweep_count, opt.seed);
  Json out{{"command", "sweep"},
           {"what", summary.what},
           {"count", opt.sweep_count},
           {"seed", opt.seed},
           {"cases", summary.cases},
           {"worst", summary.worst},
           {"threshold", summary.threshold},
           {"pass", summary.pass},
           {"worst_detail", summary.worst_detail},
           {"timestamp", iso_timestamp()}};
  emit(out, opt.format);
  return summary.pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted cycle-sum toolkit: evaluation, exchange ascent, bound certificates, "
               "and blown-up cycle constructions"};
  app.require_subcommand(1);
  CommonOpts opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate the cycle sum of a weight file");
  eval->add_option("--in", opt.in_path, "weight function JSON")->required();
  eval->add_option("--k", opt.k, "cycle length")->required();
  eval->add_flag("--f-table", opt.f_table, "include per-edge path sums");
  add_format(eval);

  CLI::App* optimize = app.add_subcommand("optimize", "seeded multi-start exchange ascent");
  optimize->add_option("--n", opt.n, "host size")->required();
  optimize->add_option("--k", opt.k, "cycle length")->required();
  optimize->add_option("--seed", opt.seed, "base seed");
  optimize->add_option("--restarts", opt.restarts, "number of random starts");
  optimize->add_option("--tol", opt.tol, "convergence tolerance");
  optimize->add_option("--max-steps", opt.max_steps, "move budget");
  optimize->add_option("--strategy", opt.strategy, "pair selection strategy")
      ->check(CLI::IsMember({"sweep", "greedy", "random"}));
  optimize->add_option("--out", opt.out_dir, "output directory");
  add_format(optimize);

  CLI::App* certify = app.add_subcommand("certify", "stationarity report and bound certificate");
  certify->add_option("--in", opt.in_path, "weight function JSON")->required();
  certify->add_option("--k", opt.k, "cycle length")->required();
  certify->add_option("--tol", opt.tol, "support tolerance for the report");
  certify->add_option("--out", opt.out_dir, "output directory");
  add_format(certify);

  CLI::App* construct = app.add_subcommand("construct", "build and count the blown-up cycle");
  construct->add_option("--n", opt.n, "vertex count")->required();
  construct->add_option("--k", opt.k, "half cycle length")->required();
  construct->add_option("--out", opt.out_dir, "output directory");
  add_format(construct);

  CLI::App* sweep = app.add_subcommand("sweep", "randomized property sweeps");
  sweep->add_option("--what", opt.sweep_what, "sweep name")
      ->check(CLI::IsMember({"identity", "method-agreement", "upper-bound", "path-cap",
                             "greedy-chain"}));
  sweep->add_option("--count", opt.sweep_count, "number of random cases");
  sweep->add_option("--seed", opt.seed, "base seed");
  add_format(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt);
    if (optimize->parsed()) return cmd_optimize(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
  } catch (const cyclemax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.klass()) {
      case cyclemax::ErrorClass::validation:
        return 2;
      case cyclemax::ErrorClass::parse:
        return 3;
      case cyclemax::ErrorClass::internal:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
