#ifndef RAZZABONI_REPORT_HPP
#define RAZZABONI_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "razzaboni/grid.hpp"

namespace razzaboni {

/// One named residual/invariant measurement with its tolerance.
struct Measurement {
  std::string name;
  double max_abs = 0.0;
  double l2 = 0.0;
  int at_i = -1, at_j = -1;  // location of the max, when it comes from a grid
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::vector<Measurement> items;

  void add(Measurement m) { items.push_back(std::move(m)); }
  void add_scalar(const std::string& name, double value, double tol,
                  const std::string& note = "");
  void add_array(const std::string& name, const Array2& values, double tol,
                 int interior_margin = 0, const std::string& note = "");

  bool all_pass() const;
  const Measurement* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Max/L2 summary of an array, optionally restricted to interior nodes.
Measurement summarize_array(const std::string& name, const Array2& values, double tol,
                            int interior_margin = 0);

}  // namespace razzaboni

#endif
