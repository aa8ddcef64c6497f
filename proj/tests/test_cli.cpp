#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cyclemax/io.hpp"
#include "cyclemax/random_weights.hpp"

using namespace cyclemax;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "cyclemax_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  std::string cmd = std::string(CYCLEMAX_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(raw);
  result.output = read_text_file(out);
  return result;
}

std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream os;
  std::string line;
  while (std::getline(in, line))
    if (line.find("timestamp") == std::string::npos) os << line << "\n";
  return os.str();
}

}  // namespace

TEST_CASE("eval reports the triangle optimum") {
  fs::path file = scratch_dir() / "triangle.json";
  write_weight_file(file, uniform_cycle_weights(3, 3));
  RunResult r = run_cli("eval --in " + file.string() + " --k 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.037037037037037035") != std::string::npos);

  fs::path sq = scratch_dir() / "square.json";
  write_weight_file(sq, uniform_cycle_weights(4, 4));
  RunResult r4 = run_cli("eval --in " + sq.string() + " --k 4 --f-table --format csv");
  CHECK(r4.exit_code == 0);
  CHECK(r4.output.find("0.00390625") != std::string::npos);
  CHECK(r4.output.find("f_table") != std::string::npos);
}

TEST_CASE("exit codes distinguish parse and validation failures") {
  fs::path bad = scratch_dir() / "bad.json";
  write_text_file(bad, "{not json");
  CHECK(run_cli("eval --in " + bad.string() + " --k 3").exit_code == 3);

  fs::path missing = scratch_dir() / "missing.json";
  fs::remove(missing);
  CHECK(run_cli("eval --in " + missing.string() + " --k 3").exit_code == 3);

  fs::path tri = scratch_dir() / "tri2.json";
  write_weight_file(tri, uniform_cycle_weights(3, 3));
  CHECK(run_cli("eval --in " + tri.string() + " --k 9").exit_code == 2);
  CHECK(run_cli("optimize --n 5 --k 2 --restarts 1").exit_code == 2);
  CHECK(run_cli("construct --n 5 --k 3").exit_code == 2);

  fs::path negative = scratch_dir() / "neg.json";
  write_text_file(negative,
                  "{\"n\": 3, \"normalized\": false, \"edges\": "
                  "[{\"u\": 0, \"v\": 1, \"w\": -0.25}]}\n");
  CHECK(run_cli("eval --in " + negative.string() + " --k 3").exit_code == 2);
}

TEST_CASE("construct emits graph, counts, and ratios") {
  fs::path dir = scratch_dir() / "construct9";
  RunResult r = run_cli("construct --n 9 --k 3 --out " + dir.string() + " --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("closed_form_count,8") != std::string::npos);
  CHECK(r.output.find("brute_force_count,8") != std::string::npos);

  SimpleGraph g = graph_from_edge_list(read_text_file(dir / "graph.txt"));
  CHECK(g.vertex_bound() == 9);
  CHECK(g.edge_count() == 12);

  RunResult big = run_cli("construct --n 300 --k 3 --format csv");
  CHECK(big.exit_code == 0);
  CHECK(big.output.find("brute_force_count,null") != std::string::npos);
  CHECK(big.output.find("0.970299") != std::string::npos);
}

TEST_CASE("optimize runs are byte-reproducible modulo timestamps") {
  fs::path dir1 = scratch_dir() / "run1";
  fs::path dir2 = scratch_dir() / "run2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  std::string common = "optimize --n 6 --k 3 --restarts 2 --seed 1 --out ";
  RunResult r1 = run_cli(common + dir1.string());
  RunResult r2 = run_cli(common + dir2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(strip_timestamp(r1.output) == strip_timestamp(r2.output));
  for (const char* name : {"best_weights.json", "trace.csv", "stationarity.json",
                           "certificate.json"}) {
    CHECK(read_text_file(dir1 / name) == read_text_file(dir2 / name));
  }
  CHECK(strip_timestamp(read_text_file(dir1 / "summary.json")) ==
        strip_timestamp(read_text_file(dir2 / "summary.json")));

  // The trace file honors the pinned column layout.
  std::string trace = read_text_file(dir1 / "trace.csv");
  CHECK(trace.rfind("step,e1_u,e1_v,e2_u,e2_v,x_before,x_after,beta\n", 0) == 0);

  WeightFunction best = read_weight_file(dir1 / "best_weights.json");
  CHECK(best.normalized());
}

TEST_CASE("optimize finds the triangle optimum from the pinned flags") {
  RunResult r = run_cli("optimize --n 6 --k 3 --restarts 20 --seed 7");
  REQUIRE(r.exit_code == 0);
  Json summary = Json::parse(r.output);
  CHECK(std::abs(summary.at("best_value").get<double>() - 1.0 / 27) <= 1e-9);
}

TEST_CASE("certify writes both reports") {
  fs::path file = scratch_dir() / "cycle4.json";
  write_weight_file(file, uniform_cycle_weights(6, 4));
  fs::path dir = scratch_dir() / "certify4";
  RunResult r = run_cli("certify --in " + file.string() + " --k 4 --out " + dir.string());
  CHECK(r.exit_code == 0);
  Json cert = Json::parse(read_text_file(dir / "certificate.json"));
  CHECK(cert.at("case").get<int>() == 1);
  CHECK(cert.at("equality_case").get<bool>());
  Json stat = Json::parse(read_text_file(dir / "stationarity.json"));
  CHECK(stat.at("max_f_deviation").get<double>() <= 1e-12);
}

TEST_CASE("sweep command reports pass") {
  RunResult r = run_cli("sweep --what identity --count 25 --seed 5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass,true") != std::string::npos);
}

TEST_CASE("weight files round-trip") {
  SplitMix64 rng(4711);
  for (int trial = 0; trial < 10; ++trial) {
    WeightFunction w = random_weight_function(rng.uniform_int(3, 9), rng.next());
    fs::path file = scratch_dir() / "roundtrip.json";
    write_weight_file(file, w);
    WeightFunction back = read_weight_file(file);
    CHECK(back.n() == w.n());
    CHECK(back.entries() == w.entries());
    CHECK(back.normalized() == w.normalized());
  }
}
