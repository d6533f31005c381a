#include "razzaboni/surface.hpp"

#include <cmath>

namespace razzaboni {

FrameTriple frame_rhs_v(const Frame& frame, double lambda, double lambda_u, double tau,
                        double gamma) {
  const Vec3M &t = frame.t, &n = frame.n, &b = frame.b;
  const double lt = lambda * tau;
  switch (frame.sig.tag) {
    case CaseTag::Euclidean:
      return {n * (-lt) + b * lambda_u, t * lt + b * gamma, t * (-lambda_u) + n * (-gamma)};
    case CaseTag::Case1:
      return {n * (-lt) + b * lambda_u, t * (-lt) + b * gamma,
              t * (-lambda_u) + n * gamma};
    case CaseTag::Case2:
      return {n * lt + b * lambda_u, t * (-lt) + b * gamma, t * lambda_u + n * gamma};
    case CaseTag::Case3:
      return {n * lt + b * lambda_u, t * lt + b * gamma, t * lambda_u + n * (-gamma)};
  }
  throw ConfigError("unknown case tag");
}

namespace {

struct MarchState {
  Vec3M pos;
  Vec3M t, n, b;
  MarchState operator+(const MarchState& o) const {
    return {pos + o.pos, t + o.t, n + o.n, b + o.b};
  }
  MarchState operator*(double c) const { return {pos * c, t * c, n * c, b * c}; }
};

// Component view of a Vec3M grid for finite differencing.
struct VecField {
  Array2 x0, x1, x2;

  VecField(int nu, int nv) : x0(nu, nv), x1(nu, nv), x2(nu, nv) {}
  explicit VecField(const SurfaceMesh& mesh)
      : x0(mesh.grid.nodes_u(), mesh.grid.nodes_v()),
        x1(mesh.grid.nodes_u(), mesh.grid.nodes_v()),
        x2(mesh.grid.nodes_u(), mesh.grid.nodes_v()) {
    for (int j = 0; j < x0.nv(); ++j) {
      for (int i = 0; i < x0.nu(); ++i) {
        const Vec3M& p = mesh.position(i, j);
        x0(i, j) = p.x0;
        x1(i, j) = p.x1;
        x2(i, j) = p.x2;
      }
    }
  }

  Vec3M get(int i, int j) const { return {x0(i, j), x1(i, j), x2(i, j)}; }
};

VecField apply_du(const VecField& f, const GridSpec& g, int order) {
  VecField out(f.x0.nu(), f.x0.nv());
  out.x0 = d_du(f.x0, g, order);
  out.x1 = d_du(f.x1, g, order);
  out.x2 = d_du(f.x2, g, order);
  return out;
}

VecField apply_dv(const VecField& f, const GridSpec& g, int order) {
  VecField out(f.x0.nu(), f.x0.nv());
  out.x0 = d_dv(f.x0, g, order);
  out.x1 = d_dv(f.x1, g, order);
  out.x2 = d_dv(f.x2, g, order);
  return out;
}

VecField apply_d2u(const VecField& f, const GridSpec& g, int order) {
  VecField out(f.x0.nu(), f.x0.nv());
  out.x0 = d2_du(f.x0, g, order);
  out.x1 = d2_du(f.x1, g, order);
  out.x2 = d2_du(f.x2, g, order);
  return out;
}

VecField apply_d2v(const VecField& f, const GridSpec& g, int order) {
  VecField out(f.x0.nu(), f.x0.nv());
  auto per_component = [&](const Array2& a) {
    Array2 r(a.nu(), a.nv());
    std::vector<double> row(a.nv());
    for (int i = 0; i < a.nu(); ++i) {
      for (int j = 0; j < a.nv(); ++j) row[j] = a(i, j);
      const std::vector<double> dr = d2(row, g.hv(), false, order);
      for (int j = 0; j < a.nv(); ++j) r(i, j) = dr[j];
    }
    return r;
  };
  out.x0 = per_component(f.x0);
  out.x1 = per_component(f.x1);
  out.x2 = per_component(f.x2);
  return out;
}

Vec3M unit_normal(const Vec3M& sigma_u, const Vec3M& sigma_v, const SignatureCase& sig) {
  const Vec3M N = cross_for(sigma_u, sigma_v, sig);
  const double nn = lnorm(N, sig);
  if (nn < 1e-10) throw DegenerateTangentPlane("surface normal direction degenerates");
  return N / nn;
}

}  // namespace

SurfaceMesh synthesize(const GmcFields& fields, const Frame& initial_frame,
                       const Vec3M& origin, double residual_threshold) {
  fields.check_shapes();
  const double res = gmc_residual(fields).max_norm();
  if (res > residual_threshold) {
    throw ResidualTooLarge("input fields residual " + std::to_string(res) +
                           " exceeds threshold " + std::to_string(residual_threshold));
  }
  const GridSpec& g = fields.grid;
  const int nu = g.nodes_u(), nv = g.nodes_v();
  SurfaceMesh mesh{g, fields.sig, std::vector<Vec3M>(static_cast<size_t>(nu) * nv),
                   std::vector<Frame>(static_cast<size_t>(nu) * nv,
                                      Frame{{}, {}, {}, fields.sig}),
                   fields};

  const Array2 lambda_u = d_du(fields.lambda, g, 4);
  const SignatureCase sig = fields.sig;

  // March the v-system along u = u0 first; each u-line is then an honest
  // Frenet integration per slice.
  {
    MarchState y{origin, initial_frame.t, initial_frame.n, initial_frame.b};
    auto rhs_v = [&](const MarchState& s, double lam, double lam_u, double tau,
                     double gam) {
      const Frame f{s.t, s.n, s.b, sig};
      const FrameTriple d = frame_rhs_v(f, lam, lam_u, tau, gam);
      return MarchState{s.b * lam, d.t, d.n, d.b};
    };
    const double hv = g.hv();
    for (int j = 0; j < nv; ++j) {
      const Frame fr = Frame{y.t, y.n, y.b, sig}.renormalized();
      y.t = fr.t;
      y.n = fr.n;
      y.b = fr.b;
      mesh.position(0, j) = y.pos;
      mesh.frame(0, j) = fr;
      if (j + 1 == nv) break;
      const double l0 = fields.lambda(0, j), l1 = fields.lambda(0, j + 1);
      const double lu0 = lambda_u(0, j), lu1 = lambda_u(0, j + 1);
      const double t0 = fields.tau(0, j), t1 = fields.tau(0, j + 1);
      const double g0 = fields.gamma(0, j), g1 = fields.gamma(0, j + 1);
      const MarchState k1 = rhs_v(y, l0, lu0, t0, g0);
      const MarchState k2 = rhs_v(y + k1 * (hv / 2), 0.5 * (l0 + l1), 0.5 * (lu0 + lu1),
                                  0.5 * (t0 + t1), 0.5 * (g0 + g1));
      const MarchState k3 = rhs_v(y + k2 * (hv / 2), 0.5 * (l0 + l1), 0.5 * (lu0 + lu1),
                                  0.5 * (t0 + t1), 0.5 * (g0 + g1));
      const MarchState k4 = rhs_v(y + k3 * hv, l1, lu1, t1, g1);
      y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hv / 6);
    }
  }

  // Frenet march along u for every v-slice.
  const double hu = g.hu();
  for (int j = 0; j < nv; ++j) {
    const Frame start = mesh.frame(0, j);
    MarchState y{mesh.position(0, j), start.t, start.n, start.b};
    auto rhs_u = [&](const MarchState& s, double kap, double tau) {
      const Frame f{s.t, s.n, s.b, sig};
      const FrameTriple d = frenet_rhs_u(f, kap, tau);
      return MarchState{s.t, d.t, d.n, d.b};
    };
    for (int i = 0; i + 1 < nu; ++i) {
      const double k0 = fields.kappa(i, j), k1v = fields.kappa(i + 1, j);
      const double t0 = fields.tau(i, j), t1 = fields.tau(i + 1, j);
      const MarchState k1 = rhs_u(y, k0, t0);
      const MarchState k2 = rhs_u(y + k1 * (hu / 2), 0.5 * (k0 + k1v), 0.5 * (t0 + t1));
      const MarchState k3 = rhs_u(y + k2 * (hu / 2), 0.5 * (k0 + k1v), 0.5 * (t0 + t1));
      const MarchState k4 = rhs_u(y + k3 * hu, k1v, t1);
      y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hu / 6);
      const Frame fr = Frame{y.t, y.n, y.b, sig}.renormalized();
      y.t = fr.t;
      y.n = fr.n;
      y.b = fr.b;
      mesh.position(i + 1, j) = y.pos;
      mesh.frame(i + 1, j) = fr;
    }
  }
  return mesh;
}

Array2 compatibility_residual(const SurfaceMesh& mesh) {
  // Mixed centered differences of the positions commute identically, so the
  // meaningful closure check is against the two kinematic equations: the
  // u-march enforces sigma_u = t along every slice, while sigma_v = lambda*b
  // is only integrated along u = u0 and must propagate through the fields.
  const GridSpec& g = mesh.grid;
  const VecField pos(mesh);
  const VecField sigma_u = apply_du(pos, g, 2);
  const VecField sigma_v = apply_dv(pos, g, 2);
  Array2 r(g.nodes_u(), g.nodes_v());
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      const Frame& f = mesh.frame(i, j);
      const double ru = enorm(sigma_u.get(i, j) - f.t);
      const double rv = enorm(sigma_v.get(i, j) - f.b * mesh.fields.lambda(i, j));
      r(i, j) = std::max(ru, rv);
    }
  }
  return r;
}

Array2 geodesic_residual(const SurfaceMesh& mesh) {
  const GridSpec& g = mesh.grid;
  const VecField pos(mesh);
  const VecField sigma_u = apply_du(pos, g, 2);
  const VecField sigma_v = apply_dv(pos, g, 2);
  Array2 r(g.nodes_u(), g.nodes_v());
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      const Vec3M nhat = unit_normal(sigma_u.get(i, j), sigma_v.get(i, j), mesh.sig);
      const double eps_n = mdot(nhat, nhat, mesh.sig) > 0 ? 1.0 : -1.0;
      const Vec3M& n = mesh.frame(i, j).n;
      const Vec3M perp = n - nhat * (mdot(n, nhat, mesh.sig) / eps_n);
      r(i, j) = lnorm(perp, mesh.sig);
    }
  }
  return r;
}

FundamentalForms first_form(const SurfaceMesh& mesh) {
  const GridSpec& g = mesh.grid;
  const VecField pos(mesh);
  const VecField sigma_u = apply_du(pos, g, 2);
  const VecField sigma_v = apply_dv(pos, g, 2);
  FundamentalForms ff{Array2(g.nodes_u(), g.nodes_v()), Array2(g.nodes_u(), g.nodes_v()),
                      Array2(g.nodes_u(), g.nodes_v()), Array2(g.nodes_u(), g.nodes_v()),
                      Array2(g.nodes_u(), g.nodes_v()), Array2(g.nodes_u(), g.nodes_v())};
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      const Vec3M su = sigma_u.get(i, j), sv = sigma_v.get(i, j);
      ff.E(i, j) = mdot(su, su, mesh.sig);
      ff.F(i, j) = mdot(su, sv, mesh.sig);
      ff.G(i, j) = mdot(sv, sv, mesh.sig);
    }
  }
  return ff;
}

SecondFormReport second_form(const SurfaceMesh& mesh) {
  const GridSpec& g = mesh.grid;
  const GmcFields& f = mesh.fields;
  f.check_shapes();
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      if (std::fabs(f.kappa(i, j)) < 1e-9) {
        throw KappaNearZero("second form: kappa too close to zero");
      }
    }
  }

  const VecField pos(mesh);
  const VecField sigma_u = apply_du(pos, g, 2);
  const VecField sigma_v = apply_dv(pos, g, 2);
  const VecField sigma_uu = apply_d2u(pos, g, 2);
  const VecField sigma_uv = apply_dv(sigma_u, g, 2);
  const VecField sigma_vv = apply_d2v(pos, g, 2);
  const Array2 lambda_uu = d2_du(f.lambda, g, 2);

  const int nu = g.nodes_u(), nv = g.nodes_v();
  SecondFormReport out{Array2(nu, nv), Array2(nu, nv), Array2(nu, nv),
                       Array2(nu, nv), Array2(nu, nv), Array2(nu, nv), Array2(nu, nv)};
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const double kap = f.kappa(i, j), tau = f.tau(i, j), lam = f.lambda(i, j);
      const double luu = lambda_uu(i, j);
      double ea = -kap, fa = -lam * tau, ga;
      switch (mesh.sig.tag) {
        case CaseTag::Euclidean:
          // Derived from the frame matrices; not printed in the source text.
          fa = lam * tau;
          ga = (lam / kap) * (luu - lam * tau * tau);
          break;
        case CaseTag::Case1:
        case CaseTag::Case2:
          ga = (lam / kap) * (-luu - lam * tau * tau);
          break;
        case CaseTag::Case3:
          ga = (lam / kap) * (-luu + lam * tau * tau);
          break;
        default:
          throw ConfigError("unknown case tag");
      }
      const Vec3M nhat = unit_normal(sigma_u.get(i, j), sigma_v.get(i, j), mesh.sig);
      const double em = mdot(sigma_uu.get(i, j), nhat, mesh.sig);
      const double fm = mdot(sigma_uv.get(i, j), nhat, mesh.sig);
      const double gm = mdot(sigma_vv.get(i, j), nhat, mesh.sig);
      out.e_analytic(i, j) = ea;
      out.f_analytic(i, j) = fa;
      out.g_analytic(i, j) = ga;
      out.e_measured(i, j) = em;
      out.f_measured(i, j) = fm;
      out.g_measured(i, j) = gm;
      out.discrepancy(i, j) = std::max({std::fabs(ea - em), std::fabs(fa - fm),
                                        std::fabs(ga - gm)});
    }
  }
  return out;
}

Array2 gauss_curvature_intrinsic(const GmcFields& fields) {
  fields.check_shapes();
  const GridSpec& g = fields.grid;
  const Array2 lambda_uu = d2_du(fields.lambda, g, 2);
  Array2 K(g.nodes_u(), g.nodes_v());
  for (int j = 0; j < g.nodes_v(); ++j) {
    for (int i = 0; i < g.nodes_u(); ++i) {
      if (!(fields.lambda(i, j) > 0.0)) {
        throw NonpositiveLambda("gauss curvature: lambda must be positive");
      }
      K(i, j) = -fields.sig.eps1 * lambda_uu(i, j) / fields.lambda(i, j);
    }
  }
  return K;
}

Array2 gauss_curvature_measured(const SurfaceMesh& mesh) {
  const GridSpec& g = mesh.grid;
  const FundamentalForms ff = first_form(mesh);
  const Array2 &E = ff.E, &F = ff.F, &G = ff.G;
  const Array2 E_u = d_du(E, g, 2), E_v = d_dv(E, g, 2);
  const Array2 F_u = d_du(F, g, 2), F_v = d_dv(F, g, 2);
  const Array2 G_u = d_du(G, g, 2), G_v = d_dv(G, g, 2);

  const int nu = g.nodes_u(), nv = g.nodes_v();
  Array2 c1_11(nu, nv), c2_11(nu, nv), c1_12(nu, nv), c2_12(nu, nv), c1_22(nu, nv),
      c2_22(nu, nv);
  Array2 det(nu, nv);
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const double d = E(i, j) * G(i, j) - F(i, j) * F(i, j);
      det(i, j) = d;
      const double gi11 = G(i, j) / d, gi12 = -F(i, j) / d, gi22 = E(i, j) / d;
      const double eu = E_u(i, j), ev = E_v(i, j), fu = F_u(i, j), fv = F_v(i, j);
      const double gu = G_u(i, j), gv = G_v(i, j);
      c1_11(i, j) = 0.5 * (gi11 * eu + gi12 * (2 * fu - ev));
      c2_11(i, j) = 0.5 * (gi12 * eu + gi22 * (2 * fu - ev));
      c1_12(i, j) = 0.5 * (gi11 * ev + gi12 * gu);
      c2_12(i, j) = 0.5 * (gi12 * ev + gi22 * gu);
      c1_22(i, j) = 0.5 * (gi11 * (2 * fv - gu) + gi12 * gv);
      c2_22(i, j) = 0.5 * (gi12 * (2 * fv - gu) + gi22 * gv);
    }
  }
  const Array2 d1_c1_22 = d_du(c1_22, g, 2), d1_c2_22 = d_du(c2_22, g, 2);
  const Array2 d2_c1_12 = d_dv(c1_12, g, 2), d2_c2_12 = d_dv(c2_12, g, 2);

  Array2 K(nu, nv);
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      // R^l_{212} = d_u Gamma^l_22 - d_v Gamma^l_12
      //           + Gamma^l_1m Gamma^m_22 - Gamma^l_2m Gamma^m_12
      const double r1 = d1_c1_22(i, j) - d2_c1_12(i, j) +
                        c1_11(i, j) * c1_22(i, j) + c1_12(i, j) * c2_22(i, j) -
                        c1_12(i, j) * c1_12(i, j) - c1_22(i, j) * c2_12(i, j);
      const double r2 = d1_c2_22(i, j) - d2_c2_12(i, j) +
                        c2_11(i, j) * c1_22(i, j) + c2_12(i, j) * c2_22(i, j) -
                        c2_12(i, j) * c1_12(i, j) - c2_22(i, j) * c2_12(i, j);
      const double R1212 = E(i, j) * r1 + F(i, j) * r2;
      K(i, j) = R1212 / det(i, j);
    }
  }
  return K;
}

}  // namespace razzaboni
