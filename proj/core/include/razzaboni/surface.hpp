#ifndef RAZZABONI_SURFACE_HPP
#define RAZZABONI_SURFACE_HPP

#include <vector>

#include "razzaboni/gmc.hpp"

namespace razzaboni {

/// Grid of surface points sigma(u,v) with attached frames.
struct SurfaceMesh {
  GridSpec grid;
  SignatureCase sig;
  std::vector<Vec3M> positions;  // (Nu+1)*(Nv+1), u index fastest
  std::vector<Frame> frames;
  GmcFields fields;

  int index(int i, int j) const { return j * grid.nodes_u() + i; }
  const Vec3M& position(int i, int j) const { return positions[index(i, j)]; }
  Vec3M& position(int i, int j) { return positions[index(i, j)]; }
  const Frame& frame(int i, int j) const { return frames[index(i, j)]; }
  Frame& frame(int i, int j) { return frames[index(i, j)]; }
};

/// v-direction frame derivatives per the case's v-variation matrix.
FrameTriple frame_rhs_v(const Frame& frame, double lambda, double lambda_u, double tau,
                        double gamma);

/// Builds the surface from solved fields: integrates the v-system along
/// u = u0 (sigma_v = lambda*b), then the Frenet u-system along every v-slice
/// (sigma_u = t). Throws ResidualTooLarge when the input fields fail the
/// residual threshold.
SurfaceMesh synthesize(const GmcFields& fields, const Frame& initial_frame,
                       const Vec3M& origin, double residual_threshold = 1e-2);

/// Kinematic closure residual: max of || D_u sigma - t || and
/// || D_v sigma - lambda*b || by centered differences.
Array2 compatibility_residual(const SurfaceMesh& mesh);

/// Size of the component of n off the measured surface normal direction.
Array2 geodesic_residual(const SurfaceMesh& mesh);

struct FundamentalForms {
  Array2 E, F, G;  // first form
  Array2 e, f, g;  // second form
};

/// Measures E = <sigma_u,sigma_u>, F, G by centered differences.
FundamentalForms first_form(const SurfaceMesh& mesh);

/// Second fundamental form: the closed-form coefficients evaluated from the
/// fields alongside the mesh-measured <sigma_ab, N> values, with their
/// nodewise discrepancy. In Case 3 the printed e and f coefficients disagree
/// in sign with the measured convention; the discrepancy is reported, not
/// corrected.
struct SecondFormReport {
  Array2 e_analytic, f_analytic, g_analytic;
  Array2 e_measured, f_measured, g_measured;
  Array2 discrepancy;  // max over the three coefficients, per node
};

SecondFormReport second_form(const SurfaceMesh& mesh);

/// Gaussian curvature from the fields: K = -eps1 * lambda_uu / lambda.
Array2 gauss_curvature_intrinsic(const GmcFields& fields);

/// Gaussian curvature measured from mesh positions: metric coefficients by
/// centered differences, then the curvature tensor of the 2x2 metric.
Array2 gauss_curvature_measured(const SurfaceMesh& mesh);

}  // namespace razzaboni

#endif
