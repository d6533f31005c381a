#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(RAZZABONI_CLI_PATH) + " " + args +
                          " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "razzaboni_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

nlohmann::json load(const fs::path& p) {
  nlohmann::json j;
  std::ifstream f(p);
  REQUIRE(f.good());
  f >> j;
  return j;
}

const std::string kConstCase1 =
    "--case case1 --A 0.5 --B 0.5 --grid 0:1.5:128,0:0.05:32 --profile 1";

}  // namespace

TEST_CASE("solve: constant Case-1 profile passes with tiny residual") {
  const fs::path dir = fresh_dir("solve_const");
  CHECK(run("solve " + kConstCase1 + " --out " + dir.string()) == 0);
  const nlohmann::json rep = load(dir / "solve_report.json");
  CHECK(rep.at("schema") == "razzaboni-report/1");
  CHECK(rep.at("pass") == true);
  for (const auto& item : rep.at("criteria")) {
    CHECK(item.at("max").get<double>() < 1e-12);
  }
  CHECK(fs::exists(dir / "fields.txt"));
}

TEST_CASE("solve: (A,B) = (0,0) is a config error with exit code 2") {
  const fs::path dir = fresh_dir("solve_bad");
  CHECK(run("solve --case case1 --A 0 --B 0 --out " + dir.string()) == 2);
  CHECK(run("solve --case nowhere --out " + dir.string()) == 2);
  CHECK(run("bogus-subcommand") == 2);
}

TEST_CASE("solve: euclidean B = 0 sine profile reports the reduction residual") {
  const fs::path dir = fresh_dir("solve_dym");
  const int code = run(
      "solve --case euclidean --A 1 --B 0 --periodic-u "
      "--grid 0:6.283185307179586:128,0:0.000064:16 "
      "--profile \"1 + 0.1*sin(u)\" --out " + dir.string());
  CHECK(code == 0);
  const nlohmann::json rep = load(dir / "solve_report.json");
  bool has_dym = false;
  for (const auto& item : rep.at("criteria")) {
    if (item.at("name") == "dym_reduction_residual") has_dym = true;
  }
  CHECK(has_dym);
}

TEST_CASE("full pipeline: solve, synthesize, transform, verify") {
  const fs::path dir = fresh_dir("pipeline");
  REQUIRE(run("solve " + kConstCase1 + " --out " + dir.string()) == 0);
  REQUIRE(run("synthesize --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "mesh.obj"));
  CHECK(fs::exists(dir / "mesh.json"));

  REQUIRE(run("transform --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "dual_mesh.json"));
  const nlohmann::json trep = load(dir / "transform_report.json");
  CHECK(trep.at("pass") == true);

  REQUIRE(run("verify --seed 7 --out " + dir.string()) == 0);
  const nlohmann::json vrep = load(dir / "verify_report.json");
  CHECK(vrep.at("pass") == true);

  // determinism: a second run differs only in the timestamp
  nlohmann::json v1 = vrep;
  REQUIRE(run("verify --seed 7 --out " + dir.string()) == 0);
  nlohmann::json v2 = load(dir / "verify_report.json");
  v1.erase("timestamp");
  v2.erase("timestamp");
  CHECK(v1.dump() == v2.dump());
}

TEST_CASE("transform honors the causal obstruction") {
  const fs::path dir = fresh_dir("causal");
  REQUIRE(run("solve --case case2 --A 0.25 --B 0.75 --grid 0:1.5:128,0:0.05:32 "
              "--profile 1 --out " + dir.string()) == 0);
  REQUIRE(run("synthesize --out " + dir.string()) == 0);
  CHECK(run("transform --A 1 --B 1 --out " + dir.string()) == 1);
}

TEST_CASE("synthesize rejects a fields file with NaN") {
  const fs::path dir = fresh_dir("nan");
  {
    std::ofstream out(dir / "fields.txt");
    out << "# case case1\n# A 0.5 B 0.5\n# grid 0 1 8 0 0.1 2 0\n";
    out << "u v kappa tau lambda gamma\n";
    for (int row = 0; row < 9 * 3; ++row) out << "0 0 1 nan 1 -1\n";
  }
  CHECK(run("synthesize --out " + dir.string()) == 2);
}

TEST_CASE("verify on an empty directory reports the missing artifact") {
  const fs::path dir = fresh_dir("empty");
  CHECK(run("verify --out " + dir.string()) == 2);
}
