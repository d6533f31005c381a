#ifndef RAZZABONI_GRID_HPP
#define RAZZABONI_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "razzaboni/errors.hpp"

namespace razzaboni {

/// Rectangular (u,v) grid with Nu+1 x Nv+1 nodes and uniform spacing.
struct GridSpec {
  double u0 = 0.0, u1 = 1.0;
  int nu = 8;
  double v0 = 0.0, v1 = 1.0;
  int nv = 2;
  bool periodic_u = false;

  double hu() const { return (u1 - u0) / nu; }
  double hv() const { return (v1 - v0) / nv; }
  double u(int i) const { return u0 + i * hu(); }
  double v(int j) const { return v0 + j * hv(); }
  int nodes_u() const { return nu + 1; }
  int nodes_v() const { return nv + 1; }

  void validate() const {
    if (nu < 8) throw ConfigError("grid: Nu must be >= 8");
    if (nv < 2) throw ConfigError("grid: Nv must be >= 2");
    if (!(u1 > u0)) throw ConfigError("grid: u1 must exceed u0");
    if (!(v1 > v0)) throw ConfigError("grid: v1 must exceed v0");
  }
};

/// Dense (Nu+1) x (Nv+1) array of reals; u-slices (fixed v) are contiguous.
class Array2 {
 public:
  Array2() = default;
  Array2(int nu_nodes, int nv_nodes, double value = 0.0)
      : nu_(nu_nodes), nv_(nv_nodes), a_(static_cast<size_t>(nu_nodes) * nv_nodes, value) {}

  int nu() const { return nu_; }
  int nv() const { return nv_; }
  bool empty() const { return a_.empty(); }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(j) * nu_ + i]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(j) * nu_ + i]; }

  double* col(int j) { return a_.data() + static_cast<size_t>(j) * nu_; }
  const double* col(int j) const { return a_.data() + static_cast<size_t>(j) * nu_; }

  std::vector<double> u_slice(int j) const {
    return std::vector<double>(col(j), col(j) + nu_);
  }
  void set_u_slice(int j, const std::vector<double>& s) {
    if (static_cast<int>(s.size()) != nu_) throw ShapeMismatch("slice length mismatch");
    std::copy(s.begin(), s.end(), col(j));
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::fabs(x));
    return m;
  }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

 private:
  int nu_ = 0, nv_ = 0;
  std::vector<double> a_;
};

/// First and second u-derivatives of a nodal slice. order is 2 or 4.
/// Periodic slices carry a duplicated endpoint (slice[n-1] == slice[0]).
std::vector<double> d1(const std::vector<double>& f, double h, bool periodic, int order);
std::vector<double> d2(const std::vector<double>& f, double h, bool periodic, int order);

Array2 d_du(const Array2& f, const GridSpec& g, int order);
Array2 d2_du(const Array2& f, const GridSpec& g, int order);
Array2 d_dv(const Array2& f, const GridSpec& g, int order);

/// Cumulative trapezoid integral, out[0] = 0.
std::vector<double> cumtrapz(const std::vector<double>& f, double h);

}  // namespace razzaboni

#endif
