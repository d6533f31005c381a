#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "razzaboni/expr.hpp"
#include "razzaboni/io.hpp"

using namespace razzaboni;
using razzaboni::testing::constant_fields;
using razzaboni::testing::constant_mesh;

namespace {

std::filesystem::path tmp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "razzaboni_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("profile expression grammar") {
  CHECK(eval_profile("1", 0.5) == 1.0);
  CHECK(eval_profile("1 + 0.1*sin(u)", 2.0) ==
        doctest::Approx(1.0 + 0.1 * std::sin(2.0)));
  CHECK(eval_profile("cosh(u)", 1.0) == doctest::Approx(std::cosh(1.0)));
  CHECK(eval_profile("exp(-u)", 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(eval_profile("(2 + u) * cos(u) / 2", 0.0) == doctest::Approx(1.0));
  CHECK(eval_profile("-u + 3", 1.0) == doctest::Approx(2.0));
  CHECK(eval_profile("cos(pi)", 0.0) == doctest::Approx(-1.0));

  CHECK_THROWS_AS(eval_profile("sin", 0.0), ParseError);
  CHECK_THROWS_AS(eval_profile("1 +", 0.0), ParseError);
  CHECK_THROWS_AS(eval_profile("bogus(u)", 0.0), ParseError);
  CHECK_THROWS_AS(eval_profile("(1", 0.0), ParseError);
  CHECK_THROWS_AS(eval_profile("1 2", 0.0), ParseError);
}

TEST_CASE("fields file round trip is exact") {
  const GridSpec g{0.0, 1.0, 8, 0.0, 0.1, 2, false};
  GmcFields f = constant_fields(SignatureCase::case2(), {0.25, 0.75}, g, 1.0, 1.0, 1.0);
  f.kappa(3, 1) = 1.0 / 3.0;
  f.gamma(2, 2) = -7.123456789012345e-7;

  const auto path = (tmp_dir() / "fields.txt").string();
  write_fields(path, f);
  const GmcFields back = read_fields(path);
  CHECK(back.sig.tag == f.sig.tag);
  CHECK(back.params.A == f.params.A);
  CHECK(back.grid.nu == f.grid.nu);
  CHECK(back.grid.periodic_u == f.grid.periodic_u);
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      CHECK(back.kappa(i, j) == f.kappa(i, j));
      CHECK(back.tau(i, j) == f.tau(i, j));
      CHECK(back.lambda(i, j) == f.lambda(i, j));
      CHECK(back.gamma(i, j) == f.gamma(i, j));
    }
  }

  const std::string text = slurp(path);
  CHECK(text.find("u v kappa tau lambda gamma") != std::string::npos);
}

TEST_CASE("fields reader rejects NaN and malformed input") {
  const auto dir = tmp_dir();
  const GridSpec g{0.0, 1.0, 8, 0.0, 0.1, 2, false};
  const GmcFields f = constant_fields(SignatureCase::case1(), {0.5, 0.5}, g, 1, 1, 1);
  const auto path = (dir / "bad.txt").string();
  {
    std::ofstream out(path);
    out << "# case case1\n# A 0.5 B 0.5\n# grid 0 1 8 0 0.1 2 0\n";
    out << "u v kappa tau lambda gamma\n";
    for (int row = 0; row < g.nodes_u() * g.nodes_v(); ++row) {
      out << "0 0 1 1 " << (row == 5 ? "nan" : "1") << " -1\n";
    }
  }
  CHECK_THROWS_AS(read_fields(path), ParseError);
  (void)f;

  std::ofstream(path) << "u v kappa tau lambda gamma\n1 2 3\n";
  CHECK_THROWS_AS(read_fields(path), ParseError);  // missing metadata
  CHECK_THROWS_AS(read_fields((dir / "missing.txt").string()), ParseError);
}

TEST_CASE("mesh json round trip and OBJ export") {
  const GridSpec g{0.0, 1.0, 8, 0.0, 0.2, 2, false};
  const SurfaceMesh mesh = constant_mesh(SignatureCase::case1(), {0.5, 0.5},
                                         g, 1.0, 1.0, 1.0);
  const auto dir = tmp_dir();
  const auto jpath = (dir / "mesh.json").string();
  write_mesh_json(jpath, mesh);
  const SurfaceMesh back = read_mesh_json(jpath);
  CHECK(back.sig.tag == mesh.sig.tag);
  for (size_t k = 0; k < mesh.positions.size(); ++k) {
    CHECK(enorm(back.positions[k] - mesh.positions[k]) == 0.0);
    CHECK(enorm(back.frames[k].t - mesh.frames[k].t) == 0.0);
  }
  CHECK(back.fields.lambda(4, 1) == mesh.fields.lambda(4, 1));

  const auto opath = (dir / "mesh.obj").string();
  write_obj(opath, mesh);
  const std::string obj = slurp(opath);
  // 9*3 vertices, 8*2 quads * 2 triangles
  int nv = 0, nf = 0;
  std::istringstream ss(obj);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("v ", 0) == 0) ++nv;
    if (line.rfind("f ", 0) == 0) ++nf;
  }
  CHECK(nv == 27);
  CHECK(nf == 32);
  // first quad split along the (0,0)-(1,1) diagonal
  CHECK(obj.find("f 1 2 11\n") != std::string::npos);
  CHECK(obj.find("f 1 11 10\n") != std::string::npos);
}

TEST_CASE("report files are deterministic apart from the timestamp") {
  VerificationReport rep;
  rep.add_scalar("alpha", 0.5, 1.0);
  Array2 a(9, 3, 1e-5);
  rep.add_array("beta", a, 1e-3, 1, "note");
  CHECK(rep.all_pass());
  CHECK(rep.find("beta")->max_abs == doctest::Approx(1e-5));
  CHECK(rep.find("gone") == nullptr);

  const auto dir = tmp_dir();
  const auto p1 = (dir / "r1.json").string(), p2 = (dir / "r2.json").string();
  const nlohmann::json cfg = {{"seed", 7}};
  write_report(p1, rep, cfg);
  write_report(p2, rep, cfg);
  nlohmann::json j1, j2;
  std::ifstream(p1) >> j1;
  std::ifstream(p2) >> j2;
  CHECK(j1.at("schema") == "razzaboni-report/1");
  CHECK(j1.at("pass") == true);
  j1.erase("timestamp");
  j2.erase("timestamp");
  CHECK(j1.dump() == j2.dump());

  rep.add_scalar("failing", 2.0, 1.0);
  CHECK_FALSE(rep.all_pass());
}
