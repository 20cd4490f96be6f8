#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "subprocess.hpp"

using nlohmann::json;
using qmagic::testutil::RunResult;
using qmagic::testutil::run_command;

namespace {

const std::string cli = QMAGIC_CLI_PATH;
const std::string golden_dir = QMAGIC_GOLDEN_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
  CHECK(run_command(cli).exit_code == 2);
  CHECK(run_command(cli + " bogus").exit_code == 2);
  CHECK(run_command(cli + " build-b --l 2").exit_code == 2);          // missing --n
  CHECK(run_command(cli + " build-b --l 2 --n 1 --format dot").exit_code == 2);
}

TEST_CASE("build-b dump matches golden") {
  const RunResult res = run_command(cli + " build-b --l 2 --n 2 --format dump");
  CHECK(res.exit_code == 0);
  CHECK(res.out == read_file(golden_dir + "/build_b_l2_n2.dump"));
}

TEST_CASE("build-b json is well formed") {
  const RunResult res = run_command(cli + " build-b --l 3 --n 2");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "build-b");
  CHECK(j["l"] == 3);
  CHECK(j["n"] == 2);
  CHECK(j["dim"] == 9);
  CHECK(j["nonzeros"] == 18);
  CHECK(j["entries"].size() == 18);
}

TEST_CASE("verify identity passes and reports") {
  const RunResult res = run_command(cli + " verify identity --l 4 --n 2");
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["identity"] == "B_n^l=nI");
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));  // timing is opt-in

  const RunResult csv = run_command(cli + " verify identity --l 2 --n 2 --format csv");
  CHECK(csv.out.rfind("identity,l,n,dim,pass\n", 0) == 0);
}

TEST_CASE("timings flag adds the elapsed field") {
  const RunResult res = run_command(cli + " verify identity --l 2 --n 2 --timings");
  CHECK(json::parse(res.out).contains("elapsed_ms"));
}

TEST_CASE("verify theorem matches golden") {
  const RunResult res = run_command(cli + " verify theorem --l 2 --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out == read_file(golden_dir + "/theorem_l2_n3.json"));
}

TEST_CASE("spectral matches golden") {
  const RunResult res = run_command(cli + " spectral --l 3 --n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == read_file(golden_dir + "/spectral_l3_n2.json"));
}

TEST_CASE("search is byte-deterministic and matches golden") {
  const std::string cmd = cli + " search --l 2 --n 3 --size 4 --iters 300 --seed 7";
  const RunResult a = run_command(cmd);
  const RunResult b = run_command(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == read_file(golden_dir + "/search_l2_n3.json"));
}

TEST_CASE("sampled verification is byte-identical across worker counts") {
  const std::string base = cli + " verify theorem --l 2 --n 3 --mode sampled --samples 250 --seed 9";
  const RunResult one = run_command(base + " --threads 1");
  CHECK(one.exit_code == 0);
  for (const char* t : {" --threads 2", " --threads 8"})
    CHECK(run_command(base + t).out == one.out);
}

TEST_CASE("indep-set csv matches golden, dot renders") {
  const RunResult csv = run_command(cli + " indep-set --l 5 --m 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == read_file(golden_dir + "/indep_l5_m2.csv"));

  const RunResult dot = run_command(cli + " indep-set --l 3 --m 1 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("fillcolor") != std::string::npos);
}

TEST_CASE("witness accepts inline and @file subsets identically") {
  const std::string path = "/tmp/qmagic_subset_test.txt";
  {
    std::ofstream out(path);
    out << "0\n1\n2\n";
  }
  const RunResult inline_run = run_command(cli + " witness --l 2 --n 2 --subset 0,1,2");
  const RunResult file_run = run_command(cli + " witness --l 2 --n 2 --subset @" + path);
  std::remove(path.c_str());
  CHECK(inline_run.exit_code == 0);
  CHECK(inline_run.out == file_run.out);
  const json j = json::parse(inline_run.out);
  CHECK(j["found"] == true);
  CHECK(j["schur_ok"] == true);
  CHECK(j["residual"].get<double>() < 1e-8);
}

TEST_CASE("malformed subset literal is a usage error") {
  CHECK(run_command(cli + " witness --l 2 --n 2 --subset 1,x").exit_code == 2);
  CHECK(run_command(cli + " witness --l 2 --n 2 --subset @/no/such/file").exit_code == 2);
}

TEST_CASE("resource limits map to exit code 3") {
  CHECK(run_command(cli + " build-b --l 2 --n 13").exit_code == 3);
  CHECK(run_command("QMAGIC_DIM_LIMIT=10000 " + cli + " build-b --l 2 --n 13").exit_code == 0);
  CHECK(run_command("QMAGIC_DIM_LIMIT=8 " + cli + " build-b --l 2 --n 4").exit_code == 3);
  CHECK(run_command(cli + " verify theorem --l 9 --n 2").exit_code == 3);
  CHECK(run_command("QMAGIC_ENUM_LIMIT=10 " + cli + " verify theorem --l 2 --n 3").exit_code == 3);
}

TEST_CASE("dim limit flag overrides the environment") {
  CHECK(run_command("QMAGIC_DIM_LIMIT=8 " + cli + " build-b --l 2 --n 4 --dim-limit 100")
            .exit_code == 0);
}
