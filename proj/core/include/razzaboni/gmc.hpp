#ifndef RAZZABONI_GMC_HPP
#define RAZZABONI_GMC_HPP

#include <vector>

#include "razzaboni/frenet.hpp"
#include "razzaboni/grid.hpp"

namespace razzaboni {

enum class BoundaryMode { ClosedFormB0, ThetaA0, GeneralODE };

/// Boundary data for the per-slice lambda determination: values of lambda,
/// lambda_u, lambda_uu at u0. Ignored by the B=0 closed form.
struct BoundarySpec {
  BoundaryMode mode = BoundaryMode::ClosedFormB0;
  double lambda0 = 1.0;
  double dlambda0 = 0.0;
  double d2lambda0 = 0.0;
};

struct GmcFields {
  GridSpec grid;
  SignatureCase sig;
  BertrandParams params;
  Array2 kappa, tau, lambda, gamma;

  void check_shapes() const;
};

struct GmcResidual {
  Array2 r_kappa, r_tau, r_lambda;
  double max_norm() const {
    return std::max(r_kappa.max_abs(), std::max(r_tau.max_abs(), r_lambda.max_abs()));
  }
};

// Case-wise right-hand sides of the Gauss-Mainardi-Codazzi systems.
double kappa_v_rhs(const SignatureCase& sig, double lambda, double lambda_u, double tau,
                   double tau_u);
double tau_v_rhs(const SignatureCase& sig, double lambda_u, double kappa, double gamma_u);
double lambda_uu_rhs(const SignatureCase& sig, double lambda, double tau, double kappa,
                     double gamma);
double gamma_from_lambda_uu(const SignatureCase& sig, double lambda_uu, double lambda,
                            double tau, double kappa);
double gamma_u_from_tau_v(const SignatureCase& sig, double tau_v, double lambda_u,
                          double kappa);

/// Centered-difference residuals of the case's three GMC equations.
GmcResidual gmc_residual(const GmcFields& fields);

enum class ConstraintSource { FromKappa, FromTau };

/// Enforces A*kappa + B*tau = 1 exactly at every node by recomputing one of
/// the two fields from the other.
GmcFields close_constraint(GmcFields fields, ConstraintSource source);

/// B = 0 closed form on one u-slice: lambda = 1/sqrt(tau), gamma from the
/// case's lambda_uu relation. kappa must be the constant 1/A.
void solve_lambda_gamma_b0(const std::vector<double>& tau_slice, const SignatureCase& sig,
                           double kappa_const, double hu, bool periodic,
                           std::vector<double>& lambda, std::vector<double>& gamma,
                           int stencil_order = 2);

/// A = 0 / general-mode lambda determination on one u-slice: the third-order
/// linear ODE in lambda (gamma eliminated through the case's lambda_uu
/// relation) integrated from the supplied boundary triple.
void solve_lambda_gamma_ode(const std::vector<double>& kappa_slice,
                            const std::vector<double>& tau_slice, const SignatureCase& sig,
                            const BertrandParams& params, const BoundarySpec& boundary,
                            double hu, bool periodic, std::vector<double>& lambda,
                            std::vector<double>& gamma, int stencil_order = 2);

struct SolveOptions {
  double cfl = 0.25;       // guard: hv <= cfl * hu
  int stencil_order = 4;   // spatial order used inside the stepper
};

/// Method-of-lines driver for one signature case. The reduced state is the
/// kappa slice when B != 0 and the tau slice when B = 0; the partner field,
/// lambda and gamma are re-resolved at every stage.
class GmcSolver {
 public:
  GmcSolver(const GridSpec& grid, const SignatureCase& sig, const BertrandParams& params,
            const BoundarySpec& boundary, const SolveOptions& options = {});

  bool evolves_kappa() const { return params_.B != 0.0; }

  /// One explicit 4-stage step in v of the reduced state.
  std::vector<double> step_v(const std::vector<double>& state) const;

  /// Expands a reduced state into the four fields on one slice.
  void resolve_slice(const std::vector<double>& state, std::vector<double>& kappa,
                     std::vector<double>& tau, std::vector<double>& lambda,
                     std::vector<double>& gamma) const;

  GmcFields solve(const std::vector<double>& initial_state) const;

 private:
  std::vector<double> rhs(const std::vector<double>& state) const;

  GridSpec grid_;
  SignatureCase sig_;
  BertrandParams params_;
  BoundarySpec boundary_;
  SolveOptions options_;
};

/// Convenience wrapper over GmcSolver::solve.
GmcFields solve_gmc(const std::vector<double>& initial_state, const GridSpec& grid,
                    const SignatureCase& sig, const BertrandParams& params,
                    const BoundarySpec& boundary, const SolveOptions& options = {});

/// Residual of the single theta-equation reduction of the Euclidean A = 0
/// system, by centered differences.
Array2 reduction_residual_theta(const Array2& theta, const GridSpec& grid);

/// Residual of the extended Dym flow (Euclidean B = 0 reduction).
Array2 reduction_residual_dym(const Array2& tau, const GridSpec& grid);

/// Potential theta with theta_u = kappa and theta_v = -2*lambda, built from an
/// Euclidean A = 0 solution by cumulative integration.
Array2 theta_from_fields(const GmcFields& fields);

}  // namespace razzaboni

#endif
