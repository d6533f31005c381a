#include "razzaboni/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace razzaboni {

namespace {

constexpr const char* kToolVersion = "1.0.0";

double parse_double(const std::string& tok, const std::string& context) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty()) {
    throw ParseError(context + ": bad number '" + tok + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(context + ": non-finite value '" + tok + "'");
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for reading");
  return f;
}

nlohmann::json vec_to_json(const Vec3M& v) {
  return nlohmann::json::array({v.x0, v.x1, v.x2});
}

Vec3M vec_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected 3-vector");
  Vec3M v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (!v.finite()) throw ParseError("non-finite vector component");
  return v;
}

nlohmann::json array_to_json(const Array2& a) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : a.data()) out.push_back(x);
  return out;
}

Array2 array_from_json(const nlohmann::json& j, int nu, int nv) {
  Array2 a(nu, nv);
  if (!j.is_array() || static_cast<int>(j.size()) != nu * nv) {
    throw ParseError("field array size mismatch");
  }
  for (size_t k = 0; k < j.size(); ++k) {
    const double x = j[k].get<double>();
    if (!std::isfinite(x)) throw ParseError("non-finite field value");
    a.data()[k] = x;
  }
  return a;
}

nlohmann::json grid_to_json(const GridSpec& g) {
  nlohmann::json j;
  j["u0"] = g.u0;
  j["u1"] = g.u1;
  j["nu"] = g.nu;
  j["v0"] = g.v0;
  j["v1"] = g.v1;
  j["nv"] = g.nv;
  j["periodic_u"] = g.periodic_u;
  return j;
}

GridSpec grid_from_json(const nlohmann::json& j) {
  GridSpec g;
  g.u0 = j.at("u0").get<double>();
  g.u1 = j.at("u1").get<double>();
  g.nu = j.at("nu").get<int>();
  g.v0 = j.at("v0").get<double>();
  g.v1 = j.at("v1").get<double>();
  g.nv = j.at("nv").get<int>();
  g.periodic_u = j.at("periodic_u").get<bool>();
  g.validate();
  return g;
}

}  // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_fields(const std::string& path, const GmcFields& fields) {
  fields.check_shapes();
  std::ofstream f = open_out(path);
  const GridSpec& g = fields.grid;
  f << "# case " << fields.sig.name() << "\n";
  f << "# A " << format_g17(fields.params.A) << " B " << format_g17(fields.params.B)
    << "\n";
  f << "# grid " << format_g17(g.u0) << " " << format_g17(g.u1) << " " << g.nu << " "
    << format_g17(g.v0) << " " << format_g17(g.v1) << " " << g.nv << " "
    << (g.periodic_u ? 1 : 0) << "\n";
  f << "u v kappa tau lambda gamma\n";
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      f << format_g17(g.u(i)) << " " << format_g17(g.v(j)) << " "
        << format_g17(fields.kappa(i, j)) << " " << format_g17(fields.tau(i, j)) << " "
        << format_g17(fields.lambda(i, j)) << " " << format_g17(fields.gamma(i, j))
        << "\n";
    }
  }
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

GmcFields read_fields(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  GridSpec grid;
  SignatureCase sig = SignatureCase::euclidean();
  BertrandParams params;
  bool have_case = false, have_params = false, have_grid = false, have_header = false;

  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "case") {
        std::string name;
        ss >> name;
        sig = SignatureCase::from_name(name);
        have_case = true;
      } else if (key == "A") {
        std::string a, bkey, b;
        ss >> a >> bkey >> b;
        params.A = parse_double(a, path);
        params.B = parse_double(b, path);
        have_params = true;
      } else if (key == "grid") {
        std::string u0, u1, v0, v1;
        int per = 0;
        ss >> u0 >> u1 >> grid.nu >> v0 >> v1 >> grid.nv >> per;
        if (!ss) throw ParseError(path + ": malformed grid line");
        grid.u0 = parse_double(u0, path);
        grid.u1 = parse_double(u1, path);
        grid.v0 = parse_double(v0, path);
        grid.v1 = parse_double(v1, path);
        grid.periodic_u = per != 0;
        have_grid = true;
      }
      continue;
    }
    // first non-comment line is the column header
    if (line.rfind("u v kappa tau lambda gamma", 0) != 0) {
      throw ParseError(path + ": expected header 'u v kappa tau lambda gamma'");
    }
    have_header = true;
    break;
  }
  if (!have_case || !have_params || !have_grid || !have_header) {
    throw ParseError(path + ": missing metadata (case/A,B/grid) or header");
  }
  grid.validate();

  GmcFields fields{grid, sig, params, Array2(grid.nodes_u(), grid.nodes_v()),
                   Array2(grid.nodes_u(), grid.nodes_v()),
                   Array2(grid.nodes_u(), grid.nodes_v()),
                   Array2(grid.nodes_u(), grid.nodes_v())};
  int row = 0;
  const int total = grid.nodes_u() * grid.nodes_v();
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (row >= total) throw ParseError(path + ": too many data rows");
    std::istringstream ss(line);
    std::string tok[6];
    for (auto& t : tok) {
      if (!(ss >> t)) throw ParseError(path + ": short row " + std::to_string(row));
    }
    const int i = row % grid.nodes_u();
    const int j = row / grid.nodes_u();
    // u and v columns are parsed (and validated finite) but the grid is
    // authoritative for node coordinates.
    parse_double(tok[0], path);
    parse_double(tok[1], path);
    fields.kappa(i, j) = parse_double(tok[2], path);
    fields.tau(i, j) = parse_double(tok[3], path);
    fields.lambda(i, j) = parse_double(tok[4], path);
    fields.gamma(i, j) = parse_double(tok[5], path);
    ++row;
  }
  if (row != total) {
    throw ParseError(path + ": expected " + std::to_string(total) + " rows, got " +
                     std::to_string(row));
  }
  return fields;
}

void write_obj(const std::string& path, const SurfaceMesh& mesh) {
  std::ofstream f = open_out(path);
  const GridSpec& g = mesh.grid;
  f << "# razzaboni surface mesh, " << g.nodes_u() << " x " << g.nodes_v()
    << " nodes\n";
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      const Vec3M& p = mesh.position(i, j);
      f << "v " << format_g17(p.x0) << " " << format_g17(p.x1) << " "
        << format_g17(p.x2) << "\n";
    }
  }
  auto vid = [&](int i, int j) { return j * g.nodes_u() + i + 1; };
  for (int j = 0; j + 1 < g.nodes_v(); ++j) {
    for (int i = 0; i + 1 < g.nodes_u(); ++i) {
      // split the quad along the (i,j)-(i+1,j+1) diagonal
      f << "f " << vid(i, j) << " " << vid(i + 1, j) << " " << vid(i + 1, j + 1)
        << "\n";
      f << "f " << vid(i, j) << " " << vid(i + 1, j + 1) << " " << vid(i, j + 1)
        << "\n";
    }
  }
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

nlohmann::json mesh_to_json(const SurfaceMesh& mesh) {
  nlohmann::json j;
  j["schema"] = "razzaboni-mesh/1";
  j["case"] = mesh.sig.name();
  j["grid"] = grid_to_json(mesh.grid);
  j["params"] = {{"A", mesh.fields.params.A}, {"B", mesh.fields.params.B}};
  nlohmann::json pos = nlohmann::json::array();
  nlohmann::json t = nlohmann::json::array(), n = nlohmann::json::array(),
                 b = nlohmann::json::array();
  for (size_t k = 0; k < mesh.positions.size(); ++k) {
    pos.push_back(vec_to_json(mesh.positions[k]));
    t.push_back(vec_to_json(mesh.frames[k].t));
    n.push_back(vec_to_json(mesh.frames[k].n));
    b.push_back(vec_to_json(mesh.frames[k].b));
  }
  j["positions"] = std::move(pos);
  j["frames"] = {{"t", std::move(t)}, {"n", std::move(n)}, {"b", std::move(b)}};
  j["fields"] = {{"kappa", array_to_json(mesh.fields.kappa)},
                 {"tau", array_to_json(mesh.fields.tau)},
                 {"lambda", array_to_json(mesh.fields.lambda)},
                 {"gamma", array_to_json(mesh.fields.gamma)}};
  return j;
}

SurfaceMesh mesh_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "razzaboni-mesh/1") {
    throw ParseError("unrecognized mesh schema");
  }
  const GridSpec grid = grid_from_json(j.at("grid"));
  const SignatureCase sig = SignatureCase::from_name(j.at("case").get<std::string>());
  BertrandParams params{j.at("params").at("A").get<double>(),
                        j.at("params").at("B").get<double>()};
  const int nu = grid.nodes_u(), nv = grid.nodes_v();
  const size_t count = static_cast<size_t>(nu) * nv;

  SurfaceMesh mesh{grid, sig, std::vector<Vec3M>(count),
                   std::vector<Frame>(count, Frame{{}, {}, {}, sig}),
                   GmcFields{grid, sig, params, Array2(nu, nv), Array2(nu, nv),
                             Array2(nu, nv), Array2(nu, nv)}};
  const nlohmann::json& pos = j.at("positions");
  const nlohmann::json& ft = j.at("frames").at("t");
  const nlohmann::json& fn = j.at("frames").at("n");
  const nlohmann::json& fb = j.at("frames").at("b");
  if (pos.size() != count || ft.size() != count || fn.size() != count ||
      fb.size() != count) {
    throw ParseError("mesh node-count mismatch");
  }
  for (size_t k = 0; k < count; ++k) {
    mesh.positions[k] = vec_from_json(pos[k]);
    mesh.frames[k].t = vec_from_json(ft[k]);
    mesh.frames[k].n = vec_from_json(fn[k]);
    mesh.frames[k].b = vec_from_json(fb[k]);
  }
  const nlohmann::json& fields = j.at("fields");
  mesh.fields.kappa = array_from_json(fields.at("kappa"), nu, nv);
  mesh.fields.tau = array_from_json(fields.at("tau"), nu, nv);
  mesh.fields.lambda = array_from_json(fields.at("lambda"), nu, nv);
  mesh.fields.gamma = array_from_json(fields.at("gamma"), nu, nv);
  return mesh;
}

void write_mesh_json(const std::string& path, const SurfaceMesh& mesh) {
  std::ofstream f = open_out(path);
  f << mesh_to_json(mesh).dump(2) << "\n";
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

SurfaceMesh read_mesh_json(const std::string& path) {
  std::ifstream f = open_in(path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return mesh_from_json(j);
}

void write_report(const std::string& path, const VerificationReport& report,
                  const nlohmann::json& config_echo) {
  nlohmann::json j;
  j["schema"] = "razzaboni-report/1";
  j["tool_version"] = kToolVersion;
  j["timestamp"] = static_cast<long long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  j["config"] = config_echo;
  j["criteria"] = report.to_json();
  j["pass"] = report.all_pass();
  std::ofstream f = open_out(path);
  f << j.dump(2) << "\n";
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

}  // namespace razzaboni
