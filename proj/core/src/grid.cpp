#include "razzaboni/grid.hpp"

#include <array>

namespace razzaboni {

namespace {

// Offset stencils near non-periodic edges; interior stencils are centered.
// All coefficients are the classical uniform-grid finite difference weights.

double apply(const std::vector<double>& f, int i, const double* w, const int* off, int m,
             double scale) {
  double s = 0.0;
  for (int k = 0; k < m; ++k) s += w[k] * f[i + off[k]];
  return s * scale;
}

std::vector<double> d1_order2(const std::vector<double>& f, double h, bool periodic) {
  const int n = static_cast<int>(f.size());
  std::vector<double> out(n);
  if (periodic) {
    const int m = n - 1;
    for (int i = 0; i < m; ++i) {
      const int ip = (i + 1) % m, im = (i + m - 1) % m;
      out[i] = (f[ip] - f[im]) / (2 * h);
    }
    out[m] = out[0];
    return out;
  }
  for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2 * h);
  out[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
  out[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
  return out;
}

std::vector<double> d2_order2(const std::vector<double>& f, double h, bool periodic) {
  const int n = static_cast<int>(f.size());
  std::vector<double> out(n);
  const double h2 = h * h;
  if (periodic) {
    const int m = n - 1;
    for (int i = 0; i < m; ++i) {
      const int ip = (i + 1) % m, im = (i + m - 1) % m;
      out[i] = (f[ip] - 2 * f[i] + f[im]) / h2;
    }
    out[m] = out[0];
    return out;
  }
  for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - 2 * f[i] + f[i - 1]) / h2;
  // One-sided 5-point stencils, second order.
  static const double wl[5] = {35.0 / 12, -26.0 / 3, 19.0 / 2, -14.0 / 3, 11.0 / 12};
  static const int ol[5] = {0, 1, 2, 3, 4};
  static const double wr[5] = {11.0 / 12, -14.0 / 3, 19.0 / 2, -26.0 / 3, 35.0 / 12};
  static const int orr[5] = {-4, -3, -2, -1, 0};
  out[0] = apply(f, 0, wl, ol, 5, 1.0 / h2);
  out[n - 1] = apply(f, n - 1, wr, orr, 5, 1.0 / h2);
  return out;
}

std::vector<double> d1_order4(const std::vector<double>& f, double h, bool periodic) {
  const int n = static_cast<int>(f.size());
  if (n < 5) throw ShapeMismatch("d1 order 4 needs at least 5 nodes");
  std::vector<double> out(n);
  const double s = 1.0 / (12 * h);
  if (periodic) {
    const int m = n - 1;
    for (int i = 0; i < m; ++i) {
      const int i1 = (i + 1) % m, i2 = (i + 2) % m;
      const int j1 = (i + m - 1) % m, j2 = (i + m - 2) % m;
      out[i] = (f[j2] - 8 * f[j1] + 8 * f[i1] - f[i2]) * s;
    }
    out[m] = out[0];
    return out;
  }
  for (int i = 2; i + 2 < n; ++i)
    out[i] = (f[i - 2] - 8 * f[i - 1] + 8 * f[i + 1] - f[i + 2]) * s;
  static const double w0[5] = {-25, 48, -36, 16, -3};
  static const int of[5] = {0, 1, 2, 3, 4};
  static const double w1[5] = {-3, -10, 18, -6, 1};
  static const int of1[5] = {-1, 0, 1, 2, 3};
  static const double wn1[5] = {-1, 6, -18, 10, 3};
  static const int ob1[5] = {-3, -2, -1, 0, 1};
  static const double wn0[5] = {3, -16, 36, -48, 25};
  static const int ob[5] = {-4, -3, -2, -1, 0};
  out[0] = apply(f, 0, w0, of, 5, s);
  out[1] = apply(f, 1, w1, of1, 5, s);
  out[n - 2] = apply(f, n - 2, wn1, ob1, 5, s);
  out[n - 1] = apply(f, n - 1, wn0, ob, 5, s);
  return out;
}

std::vector<double> d2_order4(const std::vector<double>& f, double h, bool periodic) {
  const int n = static_cast<int>(f.size());
  if (n < 6) throw ShapeMismatch("d2 order 4 needs at least 6 nodes");
  std::vector<double> out(n);
  const double s = 1.0 / (12 * h * h);
  if (periodic) {
    const int m = n - 1;
    for (int i = 0; i < m; ++i) {
      const int i1 = (i + 1) % m, i2 = (i + 2) % m;
      const int j1 = (i + m - 1) % m, j2 = (i + m - 2) % m;
      out[i] = (-f[j2] + 16 * f[j1] - 30 * f[i] + 16 * f[i1] - f[i2]) * s;
    }
    out[m] = out[0];
    return out;
  }
  for (int i = 2; i + 2 < n; ++i)
    out[i] = (-f[i - 2] + 16 * f[i - 1] - 30 * f[i] + 16 * f[i + 1] - f[i + 2]) * s;
  static const double w0[6] = {45, -154, 214, -156, 61, -10};
  static const int of[6] = {0, 1, 2, 3, 4, 5};
  static const double w1[6] = {10, -15, -4, 14, -6, 1};
  static const int of1[6] = {-1, 0, 1, 2, 3, 4};
  static const double wn1[6] = {1, -6, 14, -4, -15, 10};
  static const int ob1[6] = {-4, -3, -2, -1, 0, 1};
  static const double wn0[6] = {-10, 61, -156, 214, -154, 45};
  static const int ob[6] = {-5, -4, -3, -2, -1, 0};
  out[0] = apply(f, 0, w0, of, 6, s);
  out[1] = apply(f, 1, w1, of1, 6, s);
  out[n - 2] = apply(f, n - 2, wn1, ob1, 6, s);
  out[n - 1] = apply(f, n - 1, wn0, ob, 6, s);
  return out;
}

}  // namespace

std::vector<double> d1(const std::vector<double>& f, double h, bool periodic, int order) {
  if (order == 2) return d1_order2(f, h, periodic);
  if (order == 4) return d1_order4(f, h, periodic);
  throw ConfigError("d1: order must be 2 or 4");
}

std::vector<double> d2(const std::vector<double>& f, double h, bool periodic, int order) {
  if (order == 2) return d2_order2(f, h, periodic);
  if (order == 4) return d2_order4(f, h, periodic);
  throw ConfigError("d2: order must be 2 or 4");
}

Array2 d_du(const Array2& f, const GridSpec& g, int order) {
  Array2 out(f.nu(), f.nv());
  for (int j = 0; j < f.nv(); ++j)
    out.set_u_slice(j, d1(f.u_slice(j), g.hu(), g.periodic_u, order));
  return out;
}

Array2 d2_du(const Array2& f, const GridSpec& g, int order) {
  Array2 out(f.nu(), f.nv());
  for (int j = 0; j < f.nv(); ++j)
    out.set_u_slice(j, d2(f.u_slice(j), g.hu(), g.periodic_u, order));
  return out;
}

Array2 d_dv(const Array2& f, const GridSpec& g, int order) {
  Array2 out(f.nu(), f.nv());
  std::vector<double> row(f.nv());
  for (int i = 0; i < f.nu(); ++i) {
    for (int j = 0; j < f.nv(); ++j) row[j] = f(i, j);
    const std::vector<double> dr = d1(row, g.hv(), false, order);
    for (int j = 0; j < f.nv(); ++j) out(i, j) = dr[j];
  }
  return out;
}

std::vector<double> cumtrapz(const std::vector<double>& f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (size_t i = 1; i < f.size(); ++i) out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return out;
}

}  // namespace razzaboni
