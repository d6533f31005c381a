#include "razzaboni/lorentz.hpp"

#include <cmath>

namespace razzaboni {

SignatureCase SignatureCase::from_tag(CaseTag t) {
  switch (t) {
    case CaseTag::Euclidean: return euclidean();
    case CaseTag::Case1: return case1();
    case CaseTag::Case2: return case2();
    case CaseTag::Case3: return case3();
  }
  throw ConfigError("unknown case tag");
}

SignatureCase SignatureCase::from_name(const std::string& name) {
  if (name == "euclidean") return euclidean();
  if (name == "case1") return case1();
  if (name == "case2") return case2();
  if (name == "case3") return case3();
  throw ConfigError("unknown case name: " + name);
}

const char* SignatureCase::name() const {
  switch (tag) {
    case CaseTag::Euclidean: return "euclidean";
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
  }
  return "?";
}

double mdot(const Vec3M& a, const Vec3M& b, const SignatureCase& sig) {
  const double s = sig.minkowski() ? -1.0 : 1.0;
  return s * a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

double lnorm(const Vec3M& a, const SignatureCase& sig) {
  return std::sqrt(std::fabs(mdot(a, a, sig)));
}

double enorm(const Vec3M& a) {
  return std::sqrt(a.x0 * a.x0 + a.x1 * a.x1 + a.x2 * a.x2);
}

CausalCharacter causal_character(const Vec3M& a, double tol) {
  const double q = mdot(a, a, SignatureCase::case1());
  const bool zero_vector = a.x0 == 0.0 && a.x1 == 0.0 && a.x2 == 0.0;
  if (zero_vector) return CausalCharacter::Spacelike;
  if (std::fabs(q) <= tol) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

Vec3M mcross(const Vec3M& a, const Vec3M& b) {
  // Determinant with first row (-e1, e2, e3).
  return {-(a.x1 * b.x2 - a.x2 * b.x1),
          a.x2 * b.x0 - a.x0 * b.x2,
          a.x0 * b.x1 - a.x1 * b.x0};
}

Vec3M ecross(const Vec3M& a, const Vec3M& b) {
  return {a.x1 * b.x2 - a.x2 * b.x1,
          a.x2 * b.x0 - a.x0 * b.x2,
          a.x0 * b.x1 - a.x1 * b.x0};
}

Vec3M cross_for(const Vec3M& a, const Vec3M& b, const SignatureCase& sig) {
  return sig.minkowski() ? mcross(a, b) : ecross(a, b);
}

double orthonormality_defect(const Vec3M& t, const Vec3M& n, const Vec3M& b,
                             const SignatureCase& sig) {
  double d = std::fabs(mdot(t, t, sig) - sig.eps1);
  d = std::max(d, std::fabs(mdot(n, n, sig) - sig.eps2));
  d = std::max(d, std::fabs(mdot(b, b, sig) - sig.eps3));
  d = std::max(d, std::fabs(mdot(t, n, sig)));
  d = std::max(d, std::fabs(mdot(t, b, sig)));
  d = std::max(d, std::fabs(mdot(n, b, sig)));
  return d;
}

namespace {

Vec3M normalize_to(const Vec3M& x, int eps, const SignatureCase& sig) {
  const double q = mdot(x, x, sig);
  if (std::fabs(q) < 1e-12) {
    throw DegenerateFrame("cannot normalize near the light cone");
  }
  if ((q > 0.0 ? 1 : -1) != eps) {
    throw DegenerateFrame("causal character flipped during renormalization");
  }
  return x / std::sqrt(std::fabs(q));
}

}  // namespace

FrameTriple reorthonormalize(const Vec3M& t, const Vec3M& n, const Vec3M& b,
                             const SignatureCase& sig) {
  if (orthonormality_defect(t, n, b, sig) >= 0.5) {
    throw DegenerateFrame("input frame defect >= 0.5");
  }
  const Vec3M n2 = normalize_to(n, sig.eps2, sig);
  // Remove the n-component of t with the metric projector; <n2,n2> = eps2.
  const Vec3M t_proj = t - n2 * (mdot(t, n2, sig) * sig.eps2);
  const Vec3M t2 = normalize_to(t_proj, sig.eps1, sig);
  Vec3M b2 = sig.minkowski() ? -mcross(t2, n2) : ecross(t2, n2);
  b2 = normalize_to(b2, sig.eps3, sig);
  return {t2, n2, b2};
}

FrameTriple canonical_frame(const SignatureCase& sig) {
  switch (sig.tag) {
    case CaseTag::Euclidean:
      return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case CaseTag::Case1:
      return {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    case CaseTag::Case2:
      return {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    case CaseTag::Case3:
      return {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  }
  throw ConfigError("unknown case tag");
}

}  // namespace razzaboni
