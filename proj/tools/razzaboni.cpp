// Command-line front end: solve the case-wise GMC systems, synthesize the
// surface, apply the dual transformation, and verify every invariant suite.
//
// Exit codes: 0 all criteria pass, 1 criterion or domain failure,
// 2 usage/configuration error.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "razzaboni/expr.hpp"
#include "razzaboni/gmc.hpp"
#include "razzaboni/io.hpp"
#include "razzaboni/surface.hpp"
#include "razzaboni/transform.hpp"

namespace rz = razzaboni;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string case_name = "case1";
  double A = 0.0;
  double B = 1.0;
  std::string grid = "0:1:16,0:0.05:8";
  bool periodic_u = false;
  std::string mode;  // b0 | a0 | general; inferred from (A,B) when empty
  std::string boundary = "1,0,0";
  std::string profile = "1";
  std::string out;
  std::string fields_path;
  std::string mesh_path;
  std::vector<std::string> tol_args;
  unsigned seed = 0;
};

rz::GridSpec parse_grid(const std::string& text, bool periodic_u) {
  rz::GridSpec g;
  double vals[4];
  int nu = 0, nv = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d,%lf:%lf:%d", &vals[0], &vals[1], &nu,
                  &vals[2], &vals[3], &nv) != 6) {
    throw rz::ConfigError("--grid expects u0:u1:Nu,v0:v1:Nv; got '" + text + "'");
  }
  g.u0 = vals[0];
  g.u1 = vals[1];
  g.nu = nu;
  g.v0 = vals[2];
  g.v1 = vals[3];
  g.nv = nv;
  g.periodic_u = periodic_u;
  g.validate();
  return g;
}

rz::BoundarySpec parse_boundary(const std::string& text, rz::BoundaryMode mode) {
  rz::BoundarySpec b;
  b.mode = mode;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &b.lambda0, &b.dlambda0,
                  &b.d2lambda0) != 3) {
    throw rz::ConfigError("--boundary expects l0,l1,l2; got '" + text + "'");
  }
  return b;
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& args) {
  std::map<std::string, double> m;
  for (const std::string& a : args) {
    const size_t eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw rz::ConfigError("--tol expects NAME=VALUE; got '" + a + "'");
    }
    try {
      m[a.substr(0, eq)] = std::stod(a.substr(eq + 1));
    } catch (const std::exception&) {
      throw rz::ConfigError("--tol expects NAME=VALUE; got '" + a + "'");
    }
  }
  return m;
}

double tol_of(const std::map<std::string, double>& tols, const std::string& name,
              double fallback) {
  const auto it = tols.find(name);
  return it == tols.end() ? fallback : it->second;
}

rz::BoundaryMode resolve_mode(const Options& opt) {
  std::string m = opt.mode;
  if (m.empty()) m = opt.B == 0.0 ? "b0" : (opt.A == 0.0 ? "a0" : "general");
  if (m == "b0") return rz::BoundaryMode::ClosedFormB0;
  if (m == "a0") return rz::BoundaryMode::ThetaA0;
  if (m == "general") return rz::BoundaryMode::GeneralODE;
  throw rz::ConfigError("--mode must be one of b0, a0, general; got '" + m + "'");
}

nlohmann::json echo_config(const Options& opt) {
  nlohmann::json j;
  j["case"] = opt.case_name;
  j["A"] = opt.A;
  j["B"] = opt.B;
  j["grid"] = opt.grid;
  j["periodic_u"] = opt.periodic_u;
  j["mode"] = opt.mode.empty() ? "auto" : opt.mode;
  j["boundary"] = opt.boundary;
  j["profile"] = opt.profile;
  j["seed"] = opt.seed;
  return j;
}

void require_out(const Options& opt) {
  if (opt.out.empty()) throw rz::ConfigError("--out DIR is required");
  fs::create_directories(opt.out);
}

int finish(const rz::VerificationReport& rep, const std::string& report_path,
           const nlohmann::json& config) {
  rz::write_report(report_path, rep, config);
  for (const rz::Measurement& m : rep.items) {
    std::cout << (m.pass ? "pass" : "FAIL") << "  " << m.name
              << "  max=" << rz::format_g17(m.max_abs) << "  tol="
              << rz::format_g17(m.tol) << (m.note.empty() ? "" : "  (" + m.note + ")")
              << "\n";
  }
  std::cout << "report: " << report_path << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_solve(const Options& opt) {
  require_out(opt);
  const rz::SignatureCase sig = rz::SignatureCase::from_name(opt.case_name);
  const rz::GridSpec grid = parse_grid(opt.grid, opt.periodic_u);
  const rz::BertrandParams params{opt.A, opt.B};
  const rz::BoundaryMode mode = resolve_mode(opt);
  const rz::BoundarySpec boundary = parse_boundary(opt.boundary, mode);
  const auto tols = parse_tols(opt.tol_args);

  const rz::ScalarFn profile = rz::parse_profile(opt.profile);
  std::vector<double> state(grid.nodes_u());
  for (int i = 0; i < grid.nodes_u(); ++i) state[i] = profile(grid.u(i));

  const rz::GmcFields fields = rz::solve_gmc(state, grid, sig, params, boundary);
  rz::write_fields((fs::path(opt.out) / "fields.txt").string(), fields);

  rz::VerificationReport rep;
  const rz::GmcResidual res = rz::gmc_residual(fields);
  const double rtol = tol_of(tols, "residual", 1e-2);
  rep.add_array("gmc_residual_kappa", res.r_kappa, rtol, 1);
  rep.add_array("gmc_residual_tau", res.r_tau, rtol, 1);
  rep.add_array("gmc_residual_lambda", res.r_lambda, rtol, 1);
  if (sig.tag == rz::CaseTag::Euclidean && params.B == 0.0) {
    rep.add_array("dym_reduction_residual", rz::reduction_residual_dym(fields.tau, grid),
                  tol_of(tols, "dym", 1e-2), 2);
  }
  if (sig.tag == rz::CaseTag::Euclidean && params.A == 0.0) {
    rep.add_array("theta_reduction_residual",
                  rz::reduction_residual_theta(rz::theta_from_fields(fields), grid),
                  tol_of(tols, "theta", 1e-2), 2);
  }
  return finish(rep, (fs::path(opt.out) / "solve_report.json").string(),
                echo_config(opt));
}

rz::VerificationReport mesh_report(const rz::SurfaceMesh& mesh,
                                   const std::map<std::string, double>& tols) {
  rz::VerificationReport rep;
  rep.add_array("compatibility_residual", rz::compatibility_residual(mesh),
                tol_of(tols, "compat", 1e-3), 2);
  rep.add_array("geodesic_residual", rz::geodesic_residual(mesh),
                tol_of(tols, "geodesic", 1e-3), 2);
  const rz::FundamentalForms ff = rz::first_form(mesh);
  const int nu = mesh.grid.nodes_u(), nv = mesh.grid.nodes_v();
  rz::Array2 e_dev(nu, nv), g_dev(nu, nv);
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const double lam = mesh.fields.lambda(i, j);
      e_dev(i, j) = ff.E(i, j) - mesh.sig.eps1;
      g_dev(i, j) = ff.G(i, j) - mesh.sig.eps3 * lam * lam;
    }
  }
  const double ftol = tol_of(tols, "first_form", 1e-3);
  rep.add_array("first_form_F", ff.F, ftol, 2);
  rep.add_array("first_form_E_vs_eps1", e_dev, ftol, 2);
  rep.add_array("first_form_G_vs_eps3_lambda2", g_dev, ftol, 2);
  return rep;
}

int cmd_synthesize(const Options& opt) {
  require_out(opt);
  const std::string in = opt.fields_path.empty()
                             ? (fs::path(opt.out) / "fields.txt").string()
                             : opt.fields_path;
  const rz::GmcFields fields = rz::read_fields(in);
  const auto tols = parse_tols(opt.tol_args);

  const rz::FrameTriple cf = rz::canonical_frame(fields.sig);
  const rz::Frame frame{cf.t, cf.n, cf.b, fields.sig};
  const rz::SurfaceMesh mesh = rz::synthesize(fields, frame, rz::Vec3M{},
                                              tol_of(tols, "synthesis_residual", 1e-2));
  rz::write_obj((fs::path(opt.out) / "mesh.obj").string(), mesh);
  rz::write_mesh_json((fs::path(opt.out) / "mesh.json").string(), mesh);

  return finish(mesh_report(mesh, tols),
                (fs::path(opt.out) / "synthesize_report.json").string(),
                echo_config(opt));
}

int cmd_transform(const Options& opt, bool have_A, bool have_B) {
  require_out(opt);
  const std::string in = opt.mesh_path.empty()
                             ? (fs::path(opt.out) / "mesh.json").string()
                             : opt.mesh_path;
  rz::SurfaceMesh mesh = rz::read_mesh_json(in);
  if (have_A) mesh.fields.params.A = opt.A;
  if (have_B) mesh.fields.params.B = opt.B;
  const auto tols = parse_tols(opt.tol_args);

  const rz::RazzaboniPair pair = rz::razzaboni_transform(mesh, mesh.fields.params);
  rz::write_obj((fs::path(opt.out) / "dual_mesh.obj").string(), pair.dual);
  rz::write_mesh_json((fs::path(opt.out) / "dual_mesh.json").string(), pair.dual);

  rz::VerificationReport rep =
      rz::certificate(pair, tol_of(tols, "exact", 1e-10), tol_of(tols, "angle", 1e-8),
                      tol_of(tols, "measured", 1e-3));
  if (mesh.fields.params.A == 0.0) {
    rep.add_scalar("identity_transform", 0.0, 1.0,
                   "A = 0: the dual coincides with the primal surface");
  }
  const rz::BertrandParams dp = pair.dual_params;
  rep.add_scalar("dual_constants_echo", 0.0, 1.0,
                 "(A*,B*) = (" + rz::format_g17(dp.A) + ", " + rz::format_g17(dp.B) +
                     ")");
  return finish(rep, (fs::path(opt.out) / "transform_report.json").string(),
                echo_config(opt));
}

void random_bertrand_suite(rz::VerificationReport& rep, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uk(0.5, 2.0);
  std::uniform_real_distribution<double> ua(-0.9, 0.9);
  double worst = 0.0;
  for (const rz::SignatureCase sig :
       {rz::SignatureCase::case1(), rz::SignatureCase::case2(),
        rz::SignatureCase::case3()}) {
    for (int k = 0; k < 1000; ++k) {
      const double B = uk(rng);
      double A = ua(rng) * B;  // keeps B^2 > A^2 for Cases 2-3
      if (sig.tag == rz::CaseTag::Case1 && k % 2 == 0) A = ua(rng) * 2.0;
      const double kappa = ua(rng) * 2.0;
      const double tau = (1.0 - A * kappa) / B;  // constraint manifold
      if (std::fabs(tau) < 1e-3) continue;
      const auto [ks, ts] = rz::dual_kappa_tau(kappa, tau, {A, B}, sig);
      const rz::BertrandParams dp = rz::dual_bertrand_constants({A, B}, sig);
      worst = std::max(worst, std::fabs(rz::bertrand_residual(ks, ts, dp)));
    }
  }
  rep.add_scalar("random_dual_bertrand_identity", worst, 1e-12,
                 "max |A* k* + B* t* - 1| over randomized constraint samples");
}

int cmd_verify(const Options& opt) {
  if (opt.out.empty()) throw rz::ConfigError("--out DIR is required");
  const fs::path dir(opt.out);
  const fs::path fields_file = dir / "fields.txt";
  if (!fs::exists(fields_file)) {
    throw rz::ConfigError("missing artifact: " + fields_file.string() +
                          " (run solve first)");
  }
  const auto tols = parse_tols(opt.tol_args);
  rz::VerificationReport rep;

  const rz::GmcFields fields = rz::read_fields(fields_file.string());
  const rz::GmcResidual res = rz::gmc_residual(fields);
  const double rtol = tol_of(tols, "residual", 1e-2);
  rep.add_array("gmc_residual_kappa", res.r_kappa, rtol, 1);
  rep.add_array("gmc_residual_tau", res.r_tau, rtol, 1);
  rep.add_array("gmc_residual_lambda", res.r_lambda, rtol, 1);

  const fs::path mesh_file = dir / "mesh.json";
  if (fs::exists(mesh_file)) {
    const rz::SurfaceMesh mesh = rz::read_mesh_json(mesh_file.string());
    for (rz::Measurement& m : mesh_report(mesh, tols).items) rep.add(std::move(m));

    bool transformable = true;
    if (mesh.sig.tag == rz::CaseTag::Case2 || mesh.sig.tag == rz::CaseTag::Case3) {
      transformable = mesh.fields.params.B * mesh.fields.params.B >
                      mesh.fields.params.A * mesh.fields.params.A;
    }
    for (const double t : mesh.fields.tau.data()) transformable = transformable && t > 0.0;
    if (transformable) {
      const rz::RazzaboniPair pair =
          rz::razzaboni_transform(mesh, mesh.fields.params);
      for (rz::Measurement& m :
           rz::certificate(pair, tol_of(tols, "exact", 1e-10),
                           tol_of(tols, "angle", 1e-8), tol_of(tols, "measured", 1e-3))
               .items) {
        rep.add(std::move(m));
      }
    } else {
      rep.add_scalar("transform_skipped", 0.0, 1.0,
                     "dual transformation preconditions not met for these fields");
    }
  }

  random_bertrand_suite(rep, opt.seed);
  return finish(rep, (dir / "verify_report.json").string(), echo_config(opt));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for Bertrand-geodesic surfaces built by "
               "binormal motion in Euclidean and Minkowski 3-space"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", opt.case_name,
                    "Signature case: euclidean, case1, case2, case3");
    sub->add_option("--grid", opt.grid, "Grid u0:u1:Nu,v0:v1:Nv");
    sub->add_flag("--periodic-u", opt.periodic_u, "Periodic in u");
    sub->add_option("--out", opt.out, "Output directory");
    sub->add_option("--tol", opt.tol_args, "Named tolerance NAME=VALUE");
    sub->add_option("--seed", opt.seed, "Seed for randomized property suites");
    return sub;
  };

  CLI::App* solve = add_common(app.add_subcommand("solve", "Solve a GMC system"));
  solve->add_option("--A", opt.A, "Bertrand constant A");
  solve->add_option("--B", opt.B, "Bertrand constant B");
  solve->add_option("--mode", opt.mode, "Boundary mode: b0, a0, general");
  solve->add_option("--boundary", opt.boundary, "Boundary triple l0,l1,l2");
  solve->add_option("--profile", opt.profile,
                    "Initial u-profile expression (kappa when B != 0, tau when B = 0)");

  CLI::App* synth =
      add_common(app.add_subcommand("synthesize", "Build the surface mesh"));
  synth->add_option("--fields", opt.fields_path, "Fields file (default OUT/fields.txt)");

  CLI::App* trans =
      add_common(app.add_subcommand("transform", "Apply the dual transformation"));
  trans->add_option("--mesh", opt.mesh_path, "Mesh JSON (default OUT/mesh.json)");
  CLI::Option* optA = trans->add_option("--A", opt.A, "Override Bertrand constant A");
  CLI::Option* optB = trans->add_option("--B", opt.B, "Override Bertrand constant B");

  add_common(app.add_subcommand("verify", "Aggregate all invariant suites"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("solve")) return cmd_solve(opt);
    if (app.got_subcommand("synthesize")) return cmd_synthesize(opt);
    if (app.got_subcommand("transform")) {
      return cmd_transform(opt, optA->count() > 0, optB->count() > 0);
    }
    return cmd_verify(opt);
  } catch (const rz::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const rz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const rz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
