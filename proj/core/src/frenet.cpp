#include "razzaboni/frenet.hpp"

#include <cmath>

namespace razzaboni {

FrameTriple frenet_rhs_u(const Frame& frame, double kappa, double tau) {
  const SignatureCase& s = frame.sig;
  if (s.minkowski()) {
    return {frame.n * (s.eps2 * kappa),
            frame.t * (-s.eps1 * kappa) + frame.b * (-s.eps3 * tau),
            frame.n * (s.eps2 * tau)};
  }
  return {frame.n * kappa, frame.t * (-kappa) + frame.b * tau, frame.n * (-tau)};
}

namespace {

struct State {
  Vec3M pos, t, n, b;
  State operator+(const State& o) const {
    return {pos + o.pos, t + o.t, n + o.n, b + o.b};
  }
  State operator*(double c) const { return {pos * c, t * c, n * c, b * c}; }
};

State rhs(const State& y, double u, const ScalarFn& kappa, const ScalarFn& tau,
          const SignatureCase& sig) {
  const Frame f{y.t, y.n, y.b, sig};
  const FrameTriple d = frenet_rhs_u(f, kappa(u), tau(u));
  return {y.t, d.t, d.n, d.b};
}

void check_causal_characters(const Frame& f) {
  const double qt = mdot(f.t, f.t, f.sig);
  const double qn = mdot(f.n, f.n, f.sig);
  const double qb = mdot(f.b, f.b, f.sig);
  if ((qt > 0 ? 1 : -1) != f.sig.eps1 || (qn > 0 ? 1 : -1) != f.sig.eps2 ||
      (qb > 0 ? 1 : -1) != f.sig.eps3) {
    throw DegenerateFrame("frame causal characters drifted off the signature");
  }
}

}  // namespace

std::vector<CurveSample> integrate_curve(const ScalarFn& kappa, const ScalarFn& tau,
                                         const SignatureCase& sig, const CurveSample& initial,
                                         double u_end, double h, int renorm_every) {
  if (!(h > 0.0)) throw ConfigError("integrate_curve: step must be positive");
  const double s0 = initial.s;
  const long long n_steps = std::llround((u_end - s0) / h);
  if (n_steps < 1) throw ConfigError("integrate_curve: u_end must exceed initial.s by >= h");
  // Land exactly on u_end: stretch the step by at most half a step over the
  // whole interval.
  h = (u_end - s0) / static_cast<double>(n_steps);

  std::vector<CurveSample> out;
  out.reserve(static_cast<size_t>(n_steps) + 1);

  State y{initial.position, initial.frame.t, initial.frame.n, initial.frame.b};
  double u = s0;
  out.push_back({u, y.pos, {y.t, y.n, y.b, sig}, kappa(u), tau(u)});

  for (long long step = 1; step <= n_steps; ++step) {
    const State k1 = rhs(y, u, kappa, tau, sig);
    const State k2 = rhs(y + k1 * (h / 2), u + h / 2, kappa, tau, sig);
    const State k3 = rhs(y + k2 * (h / 2), u + h / 2, kappa, tau, sig);
    const State k4 = rhs(y + k3 * h, u + h, kappa, tau, sig);
    y = y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
    u = s0 + step * h;

    if (renorm_every > 0 && step % renorm_every == 0) {
      Frame f{y.t, y.n, y.b, sig};
      check_causal_characters(f);
      f = f.renormalized();
      y.t = f.t;
      y.n = f.n;
      y.b = f.b;
    }
    out.push_back({u, y.pos, {y.t, y.n, y.b, sig}, kappa(u), tau(u)});
  }
  return out;
}

double measure_kappa(const Vec3M& t_u, const Vec3M& n, const SignatureCase& sig) {
  return mdot(t_u, n, sig);
}

double measure_tau(const Vec3M& b_u, const Vec3M& n, const SignatureCase& sig) {
  const double d = mdot(b_u, n, sig);
  return sig.minkowski() ? d : -d;
}

std::vector<Vec3M> bertrand_mate(const std::vector<CurveSample>& curve, double A) {
  if (curve.empty()) throw ConfigError("bertrand_mate: empty curve");
  std::vector<Vec3M> out;
  out.reserve(curve.size());
  for (const CurveSample& c : curve) out.push_back(c.position + c.frame.n * A);
  return out;
}

}  // namespace razzaboni
