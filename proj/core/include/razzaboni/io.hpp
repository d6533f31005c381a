#ifndef RAZZABONI_IO_HPP
#define RAZZABONI_IO_HPP

#include <string>

#include "json.hpp"
#include "razzaboni/report.hpp"
#include "razzaboni/surface.hpp"

namespace razzaboni {

/// Columnar text file: '#'-prefixed metadata lines, then a header line
/// "u v kappa tau lambda gamma" and one row per node with 17-significant-digit
/// locale-independent formatting (round-trip exact).
void write_fields(const std::string& path, const GmcFields& fields);

/// Reads a fields file back. Throws ParseError on malformed rows or
/// non-finite values.
GmcFields read_fields(const std::string& path);

/// Wavefront OBJ of the position grid; each quad is split along the
/// (i,j)-(i+1,j+1) diagonal.
void write_obj(const std::string& path, const SurfaceMesh& mesh);

nlohmann::json mesh_to_json(const SurfaceMesh& mesh);
SurfaceMesh mesh_from_json(const nlohmann::json& j);

void write_mesh_json(const std::string& path, const SurfaceMesh& mesh);
SurfaceMesh read_mesh_json(const std::string& path);

/// Versioned report file ("schema": "razzaboni-report/1"). All content is
/// deterministic for a fixed config and seed except the single "timestamp"
/// field.
void write_report(const std::string& path, const VerificationReport& report,
                  const nlohmann::json& config_echo);

std::string format_g17(double x);

}  // namespace razzaboni

#endif
