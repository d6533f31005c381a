#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "razzaboni/frenet.hpp"

using namespace razzaboni;

namespace {

Frame canonical(const SignatureCase& sig) {
  const FrameTriple c = canonical_frame(sig);
  return {c.t, c.n, c.b, sig};
}

// Re-measure (kappa, tau) from an integrated curve at sample index i by
// centered differences of the stored frames.
std::pair<double, double> measured_at(const std::vector<CurveSample>& c, size_t i,
                                      double h, const SignatureCase& sig) {
  const Vec3M t_u = (c[i + 1].frame.t - c[i - 1].frame.t) / (2 * h);
  const Vec3M b_u = (c[i + 1].frame.b - c[i - 1].frame.b) / (2 * h);
  return {measure_kappa(t_u, c[i].frame.n, sig), measure_tau(b_u, c[i].frame.n, sig)};
}

}  // namespace

TEST_CASE("frame derivative matrices per case") {
  SUBCASE("case1 bending only") {
    const Frame f = canonical(SignatureCase::case1());
    const FrameTriple d = frenet_rhs_u(f, 1.0, 0.0);
    CHECK(enorm(d.t + f.n) == 0.0);   // t_u = -n
    CHECK(enorm(d.n + f.t) == 0.0);   // n_u = -t
    CHECK(enorm(d.b) == 0.0);
  }
  SUBCASE("zero curvature and torsion") {
    for (const SignatureCase sig :
         {SignatureCase::euclidean(), SignatureCase::case1(), SignatureCase::case2(),
          SignatureCase::case3()}) {
      const FrameTriple d = frenet_rhs_u(canonical(sig), 0.0, 0.0);
      CHECK(enorm(d.t) + enorm(d.n) + enorm(d.b) == 0.0);
    }
  }
  SUBCASE("case3 torsion only") {
    const Frame f = canonical(SignatureCase::case3());
    const FrameTriple d = frenet_rhs_u(f, 0.0, 1.0);
    CHECK(enorm(d.n + f.b) == 0.0);   // n_u = -b
    CHECK(enorm(d.b - f.n) == 0.0);   // b_u = n
  }
  SUBCASE("euclidean classical system") {
    const Frame f = canonical(SignatureCase::euclidean());
    const FrameTriple d = frenet_rhs_u(f, 2.0, 5.0);
    CHECK(enorm(d.t - f.n * 2.0) == 0.0);
    CHECK(enorm(d.n - (f.b * 5.0 - f.t * 2.0)) == 0.0);
    CHECK(enorm(d.b + f.n * 5.0) == 0.0);
  }
}

TEST_CASE("measurement conventions") {
  const SignatureCase c1 = SignatureCase::case1();
  const Vec3M n1{1, 0, 0};  // timelike principal normal of Case 1
  CHECK(measure_kappa(-n1, n1, c1) == doctest::Approx(1.0));
  CHECK(measure_kappa({0, 0, 0}, n1, c1) == 0.0);
  CHECK(measure_tau(n1 * -2.0, n1, c1) == doctest::Approx(2.0));

  const SignatureCase c2 = SignatureCase::case2();
  const Vec3M n2{0, 0, 1};
  CHECK(measure_kappa(n2 * 3.0, n2, c2) == doctest::Approx(3.0));

  const SignatureCase eu = SignatureCase::euclidean();
  const Vec3M ne{0, 1, 0};
  CHECK(measure_tau(ne * -5.0, ne, eu) == doctest::Approx(5.0));
}

TEST_CASE("bertrand residual and mate") {
  CHECK(bertrand_residual(0.0, 1.0, {0.0, 1.0}) == 0.0);
  CHECK(bertrand_residual(1.0, 0.0, {1.0, 0.0}) == 0.0);
  CHECK(bertrand_residual(1.0, 1.0, {1.0, 1.0}) == 1.0);

  // straight line: the mate is a rigid translate by A*n
  const Frame f = canonical(SignatureCase::case1());
  const auto zero = [](double) { return 0.0; };
  const auto curve = integrate_curve(zero, zero, f.sig,
                                     CurveSample{0.0, {}, f, 0.0, 0.0}, 1.0, 0.01);
  const auto mate = bertrand_mate(curve, 2.0);
  for (size_t i = 0; i < curve.size(); ++i) {
    CHECK(enorm(mate[i] - (curve[i].position + f.n * 2.0)) < 1e-14);
  }
  const auto same = bertrand_mate(curve, 0.0);
  CHECK(enorm(same.back() - curve.back().position) == 0.0);
}

TEST_CASE("integration: straight line and euclidean circle") {
  const Frame f = canonical(SignatureCase::case2());
  const auto zero = [](double) { return 0.0; };
  const auto line = integrate_curve(zero, zero, f.sig,
                                    CurveSample{0.0, {1, 2, 3}, f, 0.0, 0.0}, 2.0, 0.01);
  const Vec3M want = Vec3M{1, 2, 3} + f.t * 2.0;
  CHECK(enorm(line.back().position - want) < 1e-12);
  CHECK(enorm(line.back().frame.t - f.t) < 1e-14);

  const Frame fe = canonical(SignatureCase::euclidean());
  const auto one = [](double) { return 1.0; };
  const auto circle = integrate_curve(one, zero, fe.sig,
                                      CurveSample{0.0, {}, fe, 1.0, 0.0},
                                      2.0 * M_PI, 1e-3);
  CHECK(enorm(circle.back().position - circle.front().position) < 1e-8);
}

TEST_CASE("round trip and orthonormality drift in every signature") {
  for (const SignatureCase sig :
       {SignatureCase::euclidean(), SignatureCase::case1(), SignatureCase::case2(),
        SignatureCase::case3()}) {
    CAPTURE(sig.name());
    const Frame f = canonical(sig);
    const auto kfn = [](double u) { return 1.0 + 0.2 * std::sin(u); };
    const auto tfn = [](double u) { return 0.5 + 0.1 * std::cos(u); };

    auto roundtrip_err = [&](double h) {
      const auto c = integrate_curve(kfn, tfn, sig, CurveSample{0.0, {}, f, 0, 0},
                                     1.5, h);
      double worst = 0.0;
      for (size_t i = 8; i + 8 < c.size(); i += 7) {
        const auto [km, tm] = measured_at(c, i, h, sig);
        worst = std::max(worst, std::fabs(km - kfn(c[i].s)));
        worst = std::max(worst, std::fabs(tm - tfn(c[i].s)));
      }
      return worst;
    };
    const double e1 = roundtrip_err(1e-2), e2 = roundtrip_err(5e-3);
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);

    // constant profile round trip, tight tolerance
    const auto cc = integrate_curve([](double) { return 1.0; },
                                    [](double) { return 0.5; }, sig,
                                    CurveSample{0.0, {}, f, 0, 0}, 1.0, 1e-4);
    const auto [km, tm] = measured_at(cc, cc.size() / 2, 1e-4, sig);
    CHECK(km == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(tm == doctest::Approx(0.5).epsilon(1e-8));

    // drift below 1e-10 per unit arclength at h = 1e-3. Lorentzian frames of
    // boost type grow like e^{w u}, so the metric pairings lose digits to
    // cancellation on long arcs; keep the Minkowski runs short enough that
    // the roundoff floor stays below the drift budget.
    const double u_end = sig.minkowski() ? 3.0 : 10.0;
    const auto lng = integrate_curve(kfn, tfn, sig, CurveSample{0.0, {}, f, 0, 0},
                                     u_end, 1e-3);
    CHECK(lng.back().frame.defect() < 1e-10 * u_end);
  }
}

TEST_CASE("integration guards") {
  const Frame f = canonical(SignatureCase::case1());
  const auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate_curve(one, one, f.sig, CurveSample{0.0, {}, f, 0, 0},
                                  1.0, -0.1),
                  ConfigError);
  CHECK_THROWS_AS(integrate_curve(one, one, f.sig, CurveSample{0.0, {}, f, 0, 0},
                                  0.0, 0.1),
                  ConfigError);
}
