#ifndef RAZZABONI_TRANSFORM_HPP
#define RAZZABONI_TRANSFORM_HPP

#include <utility>

#include "razzaboni/report.hpp"
#include "razzaboni/surface.hpp"

namespace razzaboni {

/// A surface together with its dual under sigma* = sigma + A*n.
struct RazzaboniPair {
  SurfaceMesh primal;
  SurfaceMesh dual;
  BertrandParams dual_params;
  Array2 reparam;  // du*/du factor per node, positive
};

/// Builds the dual surface: offset positions, dual frames
/// t* = (B t - A b)/sqrt(A^2+B^2), b* = (A t + B b)/sqrt(A^2+B^2) in Case 1
/// (and the Euclidean case), t* = (B t + A b)/sqrt(B^2-A^2),
/// b* = (-A t + B b)/sqrt(B^2-A^2) in Cases 2-3, n* = n, and the
/// reparametrization du* = sqrt(.)*tau*du. Case 3 uses the offset
/// sigma* = sigma - A*n, the sign consistent with the printed dual tangent.
/// Throws CausalObstruction when Cases 2-3 have B^2 <= A^2 and
/// NonpositiveReparam when the du*/du factor is not positive somewhere.
RazzaboniPair razzaboni_transform(const SurfaceMesh& mesh, const BertrandParams& params);

/// Closed-form dual invariants. Case 1 / Euclidean:
/// kappa* = (B*kappa - A*tau)/((A^2+B^2)*tau), tau* = 1/((A^2+B^2)*tau).
/// Cases 2-3: kappa* = (B*kappa + A*tau)/((B^2-A^2)*tau),
/// tau* = (-A*kappa + B*tau)/((B^2-A^2)*tau).
std::pair<double, double> dual_kappa_tau(double kappa, double tau,
                                         const BertrandParams& params,
                                         const SignatureCase& sig);

/// Constants (A*, B*) with A* kappa* + B* tau* = 1 on the constraint manifold:
/// (-A, B) in Case 1 / Euclidean, s*(A, B) with s = (B^2-A^2)/(A^2+B^2)
/// in Cases 2-3.
BertrandParams dual_bertrand_constants(const BertrandParams& params,
                                       const SignatureCase& sig);

/// Measures the four defining properties of the pair plus the dual
/// invariants: offset distance vs |A|, the two binormal orthogonalities,
/// the constancy of <b,b*>, n* = n, the dual Bertrand residual, and
/// kappa*/tau* re-measured from the dual mesh under the du* reparametrization.
/// B = 0 adds the kappa* = -kappa and tau*tau* = 1/A^2 checks; Case 3 also
/// reports the dual-tangent mismatch of the opposite offset sign.
VerificationReport certificate(const RazzaboniPair& pair, double tol_exact = 1e-10,
                               double tol_angle = 1e-8, double tol_measured = 1e-3);

/// Case 1 only: transforms the dual with the dual constants and checks that
/// positions, frames and invariants return to the primal.
VerificationReport double_transform_check(const SurfaceMesh& mesh,
                                          const BertrandParams& params);

}  // namespace razzaboni

#endif
