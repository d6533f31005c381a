#ifndef RAZZABONI_TESTS_HELPERS_HPP
#define RAZZABONI_TESTS_HELPERS_HPP

#include "razzaboni/gmc.hpp"
#include "razzaboni/surface.hpp"

namespace razzaboni::testing {

/// Constant-field family: gamma is chosen to solve the case's lambda_uu
/// relation with lambda_uu = 0, so all three equations are stationary.
inline double stationary_gamma(const SignatureCase& sig, double kappa, double tau,
                               double lambda) {
  return gamma_from_lambda_uu(sig, 0.0, lambda, tau, kappa);
}

inline GmcFields constant_fields(const SignatureCase& sig, const BertrandParams& params,
                                 const GridSpec& grid, double kappa, double tau,
                                 double lambda) {
  const double gamma = stationary_gamma(sig, kappa, tau, lambda);
  return GmcFields{grid, sig, params,
                   Array2(grid.nodes_u(), grid.nodes_v(), kappa),
                   Array2(grid.nodes_u(), grid.nodes_v(), tau),
                   Array2(grid.nodes_u(), grid.nodes_v(), lambda),
                   Array2(grid.nodes_u(), grid.nodes_v(), gamma)};
}

inline SurfaceMesh constant_mesh(const SignatureCase& sig, const BertrandParams& params,
                                 const GridSpec& grid, double kappa, double tau,
                                 double lambda) {
  const GmcFields f = constant_fields(sig, params, grid, kappa, tau, lambda);
  const FrameTriple cf = canonical_frame(sig);
  return synthesize(f, Frame{cf.t, cf.n, cf.b, sig}, Vec3M{}, 1e-6);
}

}  // namespace razzaboni::testing

#endif
