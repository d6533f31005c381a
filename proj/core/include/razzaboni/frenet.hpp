#ifndef RAZZABONI_FRENET_HPP
#define RAZZABONI_FRENET_HPP

#include <functional>
#include <vector>

#include "razzaboni/lorentz.hpp"

namespace razzaboni {

struct Frame {
  Vec3M t, n, b;
  SignatureCase sig;

  double defect() const { return orthonormality_defect(t, n, b, sig); }
  Frame renormalized() const {
    const FrameTriple r = reorthonormalize(t, n, b, sig);
    return {r.t, r.n, r.b, sig};
  }
};

/// Bertrand constants of A*kappa + B*tau = 1. (A,B) != (0,0).
struct BertrandParams {
  double A = 0.0;
  double B = 1.0;
};

struct CurveSample {
  double s = 0.0;
  Vec3M position;
  Frame frame;
  double kappa = 0.0;
  double tau = 0.0;
};

/// u-direction frame derivatives. Minkowski cases follow the signed
/// Serret-Frenet system t' = eps2*kappa*n, n' = -eps1*kappa*t - eps3*tau*b,
/// b' = eps2*tau*n; the Euclidean case uses the classical system
/// t' = kappa*n, n' = -kappa*t + tau*b, b' = -tau*n.
FrameTriple frenet_rhs_u(const Frame& frame, double kappa, double tau);

using ScalarFn = std::function<double(double)>;

/// RK4 integration of (position, t, n, b) with position' = t.
/// The frame is reorthonormalized every renorm_every accepted steps
/// (0 disables renormalization).
std::vector<CurveSample> integrate_curve(const ScalarFn& kappa, const ScalarFn& tau,
                                         const SignatureCase& sig, const CurveSample& initial,
                                         double u_end, double h, int renorm_every = 16);

/// Signed curvature from a tangent derivative: kappa = <t_u, n>.
double measure_kappa(const Vec3M& t_u, const Vec3M& n, const SignatureCase& sig);

/// Signed torsion from a binormal derivative: tau = <b_u, n> in the Minkowski
/// cases and -<b_u, n> in the Euclidean case.
double measure_tau(const Vec3M& b_u, const Vec3M& n, const SignatureCase& sig);

inline double bertrand_residual(double kappa, double tau, const BertrandParams& p) {
  return p.A * kappa + p.B * tau - 1.0;
}

/// Pointwise Bertrand mate positions alpha + A*n.
std::vector<Vec3M> bertrand_mate(const std::vector<CurveSample>& curve, double A);

}  // namespace razzaboni

#endif
