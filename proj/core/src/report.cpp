#include "razzaboni/report.hpp"

#include <cmath>

namespace razzaboni {

Measurement summarize_array(const std::string& name, const Array2& values, double tol,
                            int interior_margin) {
  Measurement m;
  m.name = name;
  m.tol = tol;
  double sumsq = 0.0;
  int count = 0;
  const int k = interior_margin;
  for (int j = k; j < values.nv() - k; ++j) {
    for (int i = k; i < values.nu() - k; ++i) {
      const double a = std::fabs(values(i, j));
      if (a > m.max_abs) {
        m.max_abs = a;
        m.at_i = i;
        m.at_j = j;
      }
      sumsq += a * a;
      ++count;
    }
  }
  m.l2 = count > 0 ? std::sqrt(sumsq / count) : 0.0;
  m.pass = m.max_abs <= tol;
  return m;
}

void VerificationReport::add_scalar(const std::string& name, double value, double tol,
                                    const std::string& note) {
  Measurement m;
  m.name = name;
  m.max_abs = std::fabs(value);
  m.l2 = std::fabs(value);
  m.tol = tol;
  m.pass = m.max_abs <= tol;
  m.note = note;
  items.push_back(std::move(m));
}

void VerificationReport::add_array(const std::string& name, const Array2& values, double tol,
                                   int interior_margin, const std::string& note) {
  Measurement m = summarize_array(name, values, tol, interior_margin);
  m.note = note;
  items.push_back(std::move(m));
}

bool VerificationReport::all_pass() const {
  for (const Measurement& m : items) {
    if (!m.pass) return false;
  }
  return true;
}

const Measurement* VerificationReport::find(const std::string& name) const {
  for (const Measurement& m : items) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Measurement& m : items) {
    nlohmann::json e;
    e["name"] = m.name;
    e["max"] = m.max_abs;
    e["l2"] = m.l2;
    if (m.at_i >= 0) e["max_at"] = {m.at_i, m.at_j};
    e["tol"] = m.tol;
    e["pass"] = m.pass;
    if (!m.note.empty()) e["note"] = m.note;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace razzaboni
