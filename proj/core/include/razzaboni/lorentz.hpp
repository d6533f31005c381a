#ifndef RAZZABONI_LORENTZ_HPP
#define RAZZABONI_LORENTZ_HPP

#include <cmath>
#include <string>

#include "razzaboni/errors.hpp"

namespace razzaboni {

/// Point/vector of Minkowski 3-space. x0 is the timelike component.
struct Vec3M {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  Vec3M operator+(const Vec3M& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  Vec3M operator-(const Vec3M& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  Vec3M operator-() const { return {-x0, -x1, -x2}; }
  Vec3M operator*(double c) const { return {c * x0, c * x1, c * x2}; }
  Vec3M operator/(double c) const { return {x0 / c, x1 / c, x2 / c}; }
  Vec3M& operator+=(const Vec3M& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2;
    return *this;
  }
  bool finite() const { return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2); }
};

inline Vec3M operator*(double c, const Vec3M& v) { return v * c; }

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

enum class CaseTag { Euclidean, Case1, Case2, Case3 };

/// Metric signature case. eps1/eps2/eps3 are the causal characters of the
/// frame vectors t, n, b; the ambient metric is Euclidean for the Euclidean
/// tag and Lorentzian (-,+,+) otherwise.
struct SignatureCase {
  CaseTag tag = CaseTag::Euclidean;
  int eps1 = 1;
  int eps2 = 1;
  int eps3 = 1;

  static SignatureCase euclidean() { return {CaseTag::Euclidean, 1, 1, 1}; }
  static SignatureCase case1() { return {CaseTag::Case1, 1, -1, 1}; }
  static SignatureCase case2() { return {CaseTag::Case2, 1, 1, -1}; }
  static SignatureCase case3() { return {CaseTag::Case3, -1, 1, 1}; }
  static SignatureCase from_tag(CaseTag t);
  static SignatureCase from_name(const std::string& name);

  bool minkowski() const { return tag != CaseTag::Euclidean; }
  const char* name() const;
};

/// Inner product: Lorentzian -x0*y0 + x1*y1 + x2*y2 in the Minkowski cases,
/// ordinary dot product in the Euclidean case.
double mdot(const Vec3M& a, const Vec3M& b, const SignatureCase& sig);

/// |<a,a>|^(1/2).
double lnorm(const Vec3M& a, const SignatureCase& sig);

/// Euclidean component norm, used for purely numerical residuals.
double enorm(const Vec3M& a);

CausalCharacter causal_character(const Vec3M& a, double tol = 1e-12);

/// Lorentzian cross product: determinant with first row (-e1, e2, e3).
Vec3M mcross(const Vec3M& a, const Vec3M& b);

/// Ordinary cross product.
Vec3M ecross(const Vec3M& a, const Vec3M& b);

/// Cross product appropriate for the signature case.
Vec3M cross_for(const Vec3M& a, const Vec3M& b, const SignatureCase& sig);

struct FrameTriple {
  Vec3M t, n, b;
};

/// Max over the six frame pairings of |<x,y> - expected| where the expected
/// diagonal is (eps1, eps2, eps3) and off-diagonals vanish.
double orthonormality_defect(const Vec3M& t, const Vec3M& n, const Vec3M& b,
                             const SignatureCase& sig);

/// Metric Gram-Schmidt in the order n, t, then b = -t x_L n (Minkowski) or
/// b = t x n (Euclidean). Requires input defect < 0.5.
/// Throws DegenerateFrame when a vector cannot be normalized.
FrameTriple reorthonormalize(const Vec3M& t, const Vec3M& n, const Vec3M& b,
                             const SignatureCase& sig);

/// Exactly orthonormal axis-aligned frame with the case's causal characters,
/// oriented so that b = -t x_L n in the Minkowski cases and b = t x n in the
/// Euclidean case.
FrameTriple canonical_frame(const SignatureCase& sig);

}  // namespace razzaboni

#endif
