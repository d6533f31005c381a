#include "razzaboni/gmc.hpp"

#include <cmath>

namespace razzaboni {

void GmcFields::check_shapes() const {
  const int nu = grid.nodes_u(), nv = grid.nodes_v();
  for (const Array2* a : {&kappa, &tau, &lambda, &gamma}) {
    if (a->nu() != nu || a->nv() != nv) {
      throw ShapeMismatch("field array shape disagrees with grid");
    }
  }
}

double kappa_v_rhs(const SignatureCase& sig, double lambda, double lambda_u, double tau,
                   double tau_u) {
  if (!sig.minkowski()) return -2.0 * tau * lambda_u - tau_u * lambda;
  return lambda * tau_u + 2.0 * lambda_u * tau;
}

double tau_v_rhs(const SignatureCase& sig, double lambda_u, double kappa, double gamma_u) {
  switch (sig.tag) {
    case CaseTag::Euclidean: return gamma_u + kappa * lambda_u;
    case CaseTag::Case1: return -lambda_u * kappa - gamma_u;
    case CaseTag::Case2: return lambda_u * kappa + gamma_u;
    case CaseTag::Case3: return lambda_u * kappa - gamma_u;
  }
  throw ConfigError("unknown case tag");
}

double lambda_uu_rhs(const SignatureCase& sig, double lambda, double tau, double kappa,
                     double gamma) {
  const double lt2 = lambda * tau * tau;
  switch (sig.tag) {
    case CaseTag::Euclidean: return lt2 + kappa * gamma;
    case CaseTag::Case1: return -lt2 - kappa * gamma;
    case CaseTag::Case2: return -lt2 + kappa * gamma;
    case CaseTag::Case3: return lt2 + kappa * gamma;
  }
  throw ConfigError("unknown case tag");
}

double gamma_from_lambda_uu(const SignatureCase& sig, double lambda_uu, double lambda,
                            double tau, double kappa) {
  const double lt2 = lambda * tau * tau;
  switch (sig.tag) {
    case CaseTag::Euclidean: return (lambda_uu - lt2) / kappa;
    case CaseTag::Case1: return (-lambda_uu - lt2) / kappa;
    case CaseTag::Case2: return (lambda_uu + lt2) / kappa;
    case CaseTag::Case3: return (lambda_uu - lt2) / kappa;
  }
  throw ConfigError("unknown case tag");
}

double gamma_u_from_tau_v(const SignatureCase& sig, double tau_v, double lambda_u,
                          double kappa) {
  switch (sig.tag) {
    case CaseTag::Euclidean: return tau_v - kappa * lambda_u;
    case CaseTag::Case1: return -tau_v - kappa * lambda_u;
    case CaseTag::Case2: return tau_v - kappa * lambda_u;
    case CaseTag::Case3: return kappa * lambda_u - tau_v;
  }
  throw ConfigError("unknown case tag");
}

GmcResidual gmcresidual_impl(const GmcFields& f, int order) {
  const GridSpec& g = f.grid;
  const Array2 kappa_v = d_dv(f.kappa, g, order);
  const Array2 tau_v = d_dv(f.tau, g, order);
  const Array2 lambda_u = d_du(f.lambda, g, order);
  const Array2 lambda_uu = d2_du(f.lambda, g, order);
  const Array2 tau_u = d_du(f.tau, g, order);
  const Array2 gamma_u = d_du(f.gamma, g, order);

  GmcResidual r{Array2(g.nodes_u(), g.nodes_v()), Array2(g.nodes_u(), g.nodes_v()),
                Array2(g.nodes_u(), g.nodes_v())};
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      r.r_kappa(i, j) =
          kappa_v(i, j) - kappa_v_rhs(f.sig, f.lambda(i, j), lambda_u(i, j), f.tau(i, j),
                                      tau_u(i, j));
      r.r_tau(i, j) =
          tau_v(i, j) - tau_v_rhs(f.sig, lambda_u(i, j), f.kappa(i, j), gamma_u(i, j));
      r.r_lambda(i, j) = lambda_uu(i, j) - lambda_uu_rhs(f.sig, f.lambda(i, j), f.tau(i, j),
                                                         f.kappa(i, j), f.gamma(i, j));
    }
  }
  return r;
}

GmcResidual gmc_residual(const GmcFields& fields) {
  fields.check_shapes();
  return gmcresidual_impl(fields, 2);
}

GmcFields close_constraint(GmcFields fields, ConstraintSource source) {
  fields.check_shapes();
  const double A = fields.params.A, B = fields.params.B;
  if (source == ConstraintSource::FromKappa && B == 0.0) {
    throw DivisionByZeroConstant("close_constraint: B = 0 while deriving tau");
  }
  if (source == ConstraintSource::FromTau && A == 0.0) {
    throw DivisionByZeroConstant("close_constraint: A = 0 while deriving kappa");
  }
  for (int j = 0; j < fields.grid.nodes_v(); ++j) {
    for (int i = 0; i < fields.grid.nodes_u(); ++i) {
      if (source == ConstraintSource::FromKappa) {
        fields.tau(i, j) = (1.0 - A * fields.kappa(i, j)) / B;
      } else {
        fields.kappa(i, j) = (1.0 - B * fields.tau(i, j)) / A;
      }
    }
  }
  return fields;
}

void solve_lambda_gamma_b0(const std::vector<double>& tau_slice, const SignatureCase& sig,
                           double kappa_const, double hu, bool periodic,
                           std::vector<double>& lambda, std::vector<double>& gamma,
                           int stencil_order) {
  const int n = static_cast<int>(tau_slice.size());
  lambda.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!(tau_slice[i] > 0.0)) {
      throw NonpositiveTau("solve_lambda_gamma_b0: tau must be positive");
    }
    lambda[i] = 1.0 / std::sqrt(tau_slice[i]);
  }
  const std::vector<double> lambda_uu = d2(lambda, hu, periodic, stencil_order);
  gamma.resize(n);
  for (int i = 0; i < n; ++i) {
    gamma[i] = gamma_from_lambda_uu(sig, lambda_uu[i], lambda[i], tau_slice[i], kappa_const);
  }
}

namespace {

// Cubic midpoint interpolation of a nodal slice; result m[i] sits between
// nodes i and i+1.
std::vector<double> midpoints(const std::vector<double>& f, bool periodic) {
  const int n = static_cast<int>(f.size());
  std::vector<double> m(n - 1);
  auto interior = [&](double a, double b, double c, double d) {
    return (-a + 9.0 * b + 9.0 * c - d) / 16.0;
  };
  if (periodic) {
    const int p = n - 1;
    for (int i = 0; i < p; ++i) {
      m[i] = interior(f[(i + p - 1) % p], f[i], f[(i + 1) % p], f[(i + 2) % p]);
    }
    return m;
  }
  for (int i = 1; i + 2 < n; ++i) m[i] = interior(f[i - 1], f[i], f[i + 1], f[i + 2]);
  m[0] = (5.0 * f[0] + 15.0 * f[1] - 5.0 * f[2] + f[3]) / 16.0;
  m[n - 2] = (f[n - 4] - 5.0 * f[n - 3] + 15.0 * f[n - 2] + 5.0 * f[n - 1]) / 16.0;
  return m;
}

struct OdeState {
  double lambda, mu, gamma;  // mu = lambda_u
  OdeState operator+(const OdeState& o) const {
    return {lambda + o.lambda, mu + o.mu, gamma + o.gamma};
  }
  OdeState operator*(double c) const { return {c * lambda, c * mu, c * gamma}; }
};

}  // namespace

void solve_lambda_gamma_ode(const std::vector<double>& kappa_slice,
                            const std::vector<double>& tau_slice, const SignatureCase& sig,
                            const BertrandParams& params, const BoundarySpec& boundary,
                            double hu, bool periodic, std::vector<double>& lambda,
                            std::vector<double>& gamma, int stencil_order) {
  const int n = static_cast<int>(kappa_slice.size());
  if (static_cast<int>(tau_slice.size()) != n) {
    throw ShapeMismatch("solve_lambda_gamma_ode: slice lengths disagree");
  }
  if (params.B == 0.0) {
    throw ConfigError("solve_lambda_gamma_ode: needs B != 0 (use the B = 0 closed form)");
  }
  const double sign0 = kappa_slice[0];
  for (double k : kappa_slice) {
    if (std::fabs(k) < 1e-9 || k * sign0 <= 0.0) {
      throw SingularElimination("kappa crosses zero on the slice");
    }
  }

  const std::vector<double> kappa_u = d1(kappa_slice, hu, periodic, stencil_order);
  const std::vector<double> kappa_mid = midpoints(kappa_slice, periodic);
  const std::vector<double> kappa_u_mid = midpoints(kappa_u, periodic);
  const double ab = params.A / params.B;

  auto rhs = [&](const OdeState& z, double kappa, double kappa_u_val) {
    const double tau = (1.0 - params.A * kappa) / params.B;
    const double tau_u = -ab * kappa_u_val;
    const double lambda_uu = lambda_uu_rhs(sig, z.lambda, tau, kappa, z.gamma);
    const double kappa_v = kappa_v_rhs(sig, z.lambda, z.mu, tau, tau_u);
    const double tau_v = -ab * kappa_v;
    const double gamma_u = gamma_u_from_tau_v(sig, tau_v, z.mu, kappa);
    return OdeState{z.mu, lambda_uu, gamma_u};
  };

  lambda.resize(n);
  gamma.resize(n);
  OdeState z{boundary.lambda0, boundary.dlambda0,
             gamma_from_lambda_uu(sig, boundary.d2lambda0, boundary.lambda0,
                                  (1.0 - params.A * kappa_slice[0]) / params.B,
                                  kappa_slice[0])};
  lambda[0] = z.lambda;
  gamma[0] = z.gamma;
  for (int i = 0; i + 1 < n; ++i) {
    const OdeState k1 = rhs(z, kappa_slice[i], kappa_u[i]);
    const OdeState k2 = rhs(z + k1 * (hu / 2), kappa_mid[i], kappa_u_mid[i]);
    const OdeState k3 = rhs(z + k2 * (hu / 2), kappa_mid[i], kappa_u_mid[i]);
    const OdeState k4 = rhs(z + k3 * hu, kappa_slice[i + 1], kappa_u[i + 1]);
    z = z + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hu / 6);
    lambda[i + 1] = z.lambda;
    gamma[i + 1] = z.gamma;
  }
}

GmcSolver::GmcSolver(const GridSpec& grid, const SignatureCase& sig,
                     const BertrandParams& params, const BoundarySpec& boundary,
                     const SolveOptions& options)
    : grid_(grid), sig_(sig), params_(params), boundary_(boundary), options_(options) {
  grid_.validate();
  if (params_.A == 0.0 && params_.B == 0.0) {
    throw ConfigError("Bertrand constants (A,B) must not both vanish");
  }
  switch (boundary_.mode) {
    case BoundaryMode::ClosedFormB0:
      if (params_.B != 0.0) throw ConfigError("ClosedFormB0 mode requires B = 0");
      break;
    case BoundaryMode::ThetaA0:
      if (params_.A != 0.0) throw ConfigError("ThetaA0 mode requires A = 0");
      break;
    case BoundaryMode::GeneralODE:
      if (params_.B == 0.0) throw ConfigError("GeneralODE mode requires B != 0");
      break;
  }
}

void GmcSolver::resolve_slice(const std::vector<double>& state, std::vector<double>& kappa,
                              std::vector<double>& tau, std::vector<double>& lambda,
                              std::vector<double>& gamma) const {
  const int n = grid_.nodes_u();
  if (static_cast<int>(state.size()) != n) {
    throw ShapeMismatch("state slice length disagrees with grid");
  }
  kappa.resize(n);
  tau.resize(n);
  if (evolves_kappa()) {
    kappa = state;
    for (int i = 0; i < n; ++i) tau[i] = (1.0 - params_.A * kappa[i]) / params_.B;
    solve_lambda_gamma_ode(kappa, tau, sig_, params_, boundary_, grid_.hu(),
                           grid_.periodic_u, lambda, gamma, options_.stencil_order);
  } else {
    tau = state;
    const double k0 = 1.0 / params_.A;
    std::fill(kappa.begin(), kappa.end(), k0);
    solve_lambda_gamma_b0(tau, sig_, k0, grid_.hu(), grid_.periodic_u, lambda, gamma,
                          options_.stencil_order);
  }
  for (double l : lambda) {
    if (!(l > 0.0)) throw NonpositiveLambda("lambda reached a nonpositive value");
  }
}

std::vector<double> GmcSolver::rhs(const std::vector<double>& state) const {
  const int n = grid_.nodes_u();
  std::vector<double> kappa, tau, lambda, gamma;
  resolve_slice(state, kappa, tau, lambda, gamma);
  const std::vector<double> lambda_u =
      d1(lambda, grid_.hu(), grid_.periodic_u, options_.stencil_order);
  std::vector<double> out(n);
  if (evolves_kappa()) {
    const std::vector<double> tau_u =
        d1(tau, grid_.hu(), grid_.periodic_u, options_.stencil_order);
    for (int i = 0; i < n; ++i) {
      out[i] = kappa_v_rhs(sig_, lambda[i], lambda_u[i], tau[i], tau_u[i]);
    }
  } else {
    const std::vector<double> gamma_u =
        d1(gamma, grid_.hu(), grid_.periodic_u, options_.stencil_order);
    for (int i = 0; i < n; ++i) {
      out[i] = tau_v_rhs(sig_, lambda_u[i], kappa[i], gamma_u[i]);
    }
  }
  if (grid_.periodic_u) out[n - 1] = out[0];
  return out;
}

std::vector<double> GmcSolver::step_v(const std::vector<double>& state) const {
  const double hv = grid_.hv(), hu = grid_.hu();
  if (hv > options_.cfl * hu) {
    throw StepTooLarge("v-step exceeds the hv <= C*hu guard");
  }
  const int n = static_cast<int>(state.size());
  auto axpy = [n](const std::vector<double>& y, const std::vector<double>& k, double c) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = y[i] + c * k[i];
    return out;
  };
  const std::vector<double> k1 = rhs(state);
  const std::vector<double> k2 = rhs(axpy(state, k1, hv / 2));
  const std::vector<double> k3 = rhs(axpy(state, k2, hv / 2));
  const std::vector<double> k4 = rhs(axpy(state, k3, hv));
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = state[i] + hv / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  if (grid_.periodic_u) out[n - 1] = out[0];
  return out;
}

GmcFields GmcSolver::solve(const std::vector<double>& initial_state) const {
  const int nu = grid_.nodes_u(), nv = grid_.nodes_v();
  GmcFields f{grid_, sig_, params_, Array2(nu, nv), Array2(nu, nv), Array2(nu, nv),
              Array2(nu, nv)};
  std::vector<double> state = initial_state;
  if (grid_.periodic_u) state[nu - 1] = state[0];
  std::vector<double> kappa, tau, lambda, gamma;
  for (int j = 0; j < nv; ++j) {
    if (j > 0) state = step_v(state);
    resolve_slice(state, kappa, tau, lambda, gamma);
    f.kappa.set_u_slice(j, kappa);
    f.tau.set_u_slice(j, tau);
    f.lambda.set_u_slice(j, lambda);
    f.gamma.set_u_slice(j, gamma);
  }
  return f;
}

GmcFields solve_gmc(const std::vector<double>& initial_state, const GridSpec& grid,
                    const SignatureCase& sig, const BertrandParams& params,
                    const BoundarySpec& boundary, const SolveOptions& options) {
  return GmcSolver(grid, sig, params, boundary, options).solve(initial_state);
}

Array2 reduction_residual_theta(const Array2& theta, const GridSpec& grid) {
  const Array2 theta_u = d_du(theta, grid, 2);
  for (int j = 0; j < theta.nv(); ++j) {
    for (int i = 0; i < theta.nu(); ++i) {
      if (std::fabs(theta_u(i, j)) < 1e-9) {
        throw SingularTheta("theta_u vanishes on the grid");
      }
    }
  }
  const Array2 theta_v = d_dv(theta, grid, 2);
  const Array2 theta_vu = d_du(theta_v, grid, 2);
  const Array2 theta_vuu = d2_du(theta_v, grid, 2);
  Array2 q(theta.nu(), theta.nv());
  for (int j = 0; j < theta.nv(); ++j) {
    for (int i = 0; i < theta.nu(); ++i) {
      q(i, j) = (theta_vuu(i, j) - theta_v(i, j)) / theta_u(i, j);
    }
  }
  const Array2 q_u = d_du(q, grid, 2);
  Array2 r(theta.nu(), theta.nv());
  for (int j = 0; j < theta.nv(); ++j) {
    for (int i = 0; i < theta.nu(); ++i) {
      r(i, j) = q_u(i, j) + theta_u(i, j) * theta_vu(i, j);
    }
  }
  return r;
}

Array2 reduction_residual_dym(const Array2& tau, const GridSpec& grid) {
  Array2 w(tau.nu(), tau.nv());
  for (int j = 0; j < tau.nv(); ++j) {
    for (int i = 0; i < tau.nu(); ++i) {
      if (!(tau(i, j) > 0.0)) throw NonpositiveTau("dym residual: tau must be positive");
      w(i, j) = 1.0 / std::sqrt(tau(i, j));
    }
  }
  const Array2 w_uu = d2_du(w, grid, 2);
  Array2 bracket(tau.nu(), tau.nv());
  for (int j = 0; j < tau.nv(); ++j) {
    for (int i = 0; i < tau.nu(); ++i) {
      bracket(i, j) = w_uu(i, j) - tau(i, j) * std::sqrt(tau(i, j)) + w(i, j);
    }
  }
  const Array2 flux = d_du(bracket, grid, 2);
  const Array2 tau_v = d_dv(tau, grid, 2);
  Array2 r(tau.nu(), tau.nv());
  for (int j = 0; j < tau.nv(); ++j) {
    for (int i = 0; i < tau.nu(); ++i) r(i, j) = tau_v(i, j) - flux(i, j);
  }
  return r;
}

Array2 theta_from_fields(const GmcFields& fields) {
  fields.check_shapes();
  const GridSpec& g = fields.grid;
  // Gauge along v fixed so that theta_v(u0, v) = -2*lambda(u0, v).
  std::vector<double> lam0(g.nodes_v());
  for (int j = 0; j < g.nodes_v(); ++j) lam0[j] = -2.0 * fields.lambda(0, j);
  const std::vector<double> gauge = cumtrapz(lam0, g.hv());
  Array2 theta(g.nodes_u(), g.nodes_v());
  for (int j = 0; j < g.nodes_v(); ++j) {
    const std::vector<double> th = cumtrapz(fields.kappa.u_slice(j), g.hu());
    for (int i = 0; i < g.nodes_u(); ++i) theta(i, j) = gauge[j] + th[i];
  }
  return theta;
}

}  // namespace razzaboni
