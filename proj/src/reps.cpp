#include "trefoil/reps.hpp"

#include <cmath>

namespace trefoil {

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2;

double pure_cos(const PureVector<double>& p, const PureVector<double>& q, const AlgebraParams<double>& ap) {
  return form(p, q, ap) / std::sqrt(std::abs(norm(p, ap)) * std::abs(norm(q, ap)));
}

double line_distance(const Vec3<double>& p1, const Vec3<double>& d1, const Vec3<double>& p2, const Vec3<double>& d2) {
  Vec3<double> n{d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0]};
  double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  double dot = (p2[0] - p1[0]) * n[0] + (p2[1] - p1[1]) * n[1] + (p2[2] - p1[2]) * n[2];
  return std::abs(dot) / nn;
}

}  // namespace

const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Case1_spherical: return "Case1_spherical";
    case CaseTag::Case2_boundary: return "Case2_boundary";
    case CaseTag::Case3_elliptic_lorentz: return "Case3_elliptic_lorentz";
    case CaseTag::Case4_parabolic: return "Case4_parabolic";
    case CaseTag::Case5_hyperbolic: return "Case5_hyperbolic";
  }
  return "?";
}

int case_number(CaseTag c) { return static_cast<int>(c) + 1; }

CaseTag classify(double x, double tol) {
  double ax = std::abs(x);
  if (std::abs(ax - kHalfRoot3) <= tol) return CaseTag::Case2_boundary;
  if (std::abs(ax - 1) <= tol) return CaseTag::Case4_parabolic;
  if (ax < kHalfRoot3) return CaseTag::Case1_spherical;
  if (ax < 1) return CaseTag::Case3_elliptic_lorentz;
  return CaseTag::Case5_hyperbolic;
}

double s_of(double x) {
  if (x == 0) throw NoAffineDeformation();
  return (3 - 4 * x * x) / (4 * x);
}

RepPoint RepPoint::make(double x, bool affine, double tol) {
  RepPoint p;
  p.x = x;
  p.y = y_of(x);
  p.tag = classify(x, tol);
  if (std::abs(trefoil_char_poly(p.x, p.y)) > 1e-12) throw DomainError("(x, y) is off the character variety");
  if (affine) {
    p.s = s_of(x);
    if (std::abs(trefoil_affine_poly(p.x, *p.s)) > 1e-12) throw DomainError("(x, s) is off the affine variety");
  }
  return p;
}

QPair<Rational> case4_linear_rep(int sign) {
  auto p = split<Rational>();
  Rational x = sign < 0 ? Rational(-1) : Rational(1);
  Rational y = rat(1, 2);
  return {Quaternion<Rational>(x, 1, 1, 0, p), Quaternion<Rational>(x, y / 2, -y / 2, 0, p)};
}

QPair<Complex> case2_linear_rep(int sign) {
  auto p = split<Complex>();
  Complex x(sign < 0 ? -kHalfRoot3 : kHalfRoot3, 0);
  Complex half_i(0, 0.5);
  return {Quaternion<Complex>(x, 0.0, 0.0, half_i, p), Quaternion<Complex>(x, -0.5, 0.5, half_i, p)};
}

QPair<double> real_linear_rep(double x, double tol) {
  CaseTag tag = classify(x, tol);
  const double u = 1 - x * x;
  const double y = y_of(x);
  switch (tag) {
    case CaseTag::Case1_spherical: {
      auto p = hamilton<double>();
      double su = std::sqrt(u);
      return {Quaternion<double>(x, y / su, std::sqrt(u * u - y * y) / su, 0, p),
              Quaternion<double>(x, su, 0, 0, p)};
    }
    case CaseTag::Case3_elliptic_lorentz: {
      auto p = split<double>();
      double su = std::sqrt(u);
      return {Quaternion<double>(x, su, 0, 0, p),
              Quaternion<double>(x, (2 * x * x - 1) / (2 * su), 0.5 * std::sqrt((4 * x * x - 3) / u), 0, p)};
    }
    case CaseTag::Case4_parabolic: {
      auto p = split<double>();
      double sx = x < 0 ? -1 : 1;
      double y4 = 0.5;
      return {Quaternion<double>(sx, 1, 1, 0, p), Quaternion<double>(sx, y4 / 2, -y4 / 2, 0, p)};
    }
    case CaseTag::Case5_hyperbolic: {
      auto p = split<double>();
      double v = x * x - 1;
      double sv = std::sqrt(v);
      return {Quaternion<double>(x, 0, sv, 0, p),
              Quaternion<double>(x, -0.5 * std::sqrt((4 * x * x - 3) / v), -(2 * x * x - 1) / (2 * sv), 0, p)};
    }
    case CaseTag::Case2_boundary: break;
  }
  throw Unsupported("the representation at |x| = sqrt(3)/2 needs complex scalars");
}

LinearRep linear_rep(double x, double tol) {
  CaseTag tag = classify(x, tol);
  if (tag == CaseTag::Case2_boundary) return {tag, case2_linear_rep(x < 0 ? -1 : 1)};
  return {tag, real_linear_rep(x, tol)};
}

AffinePair<Rational> case4_affine_rep(int sign) {
  auto [a, b] = case4_linear_rep(sign);
  Rational x = a.w();
  Rational s = (Rational(3) - Rational(4) * x * x) / (Rational(4) * x);
  return affine_from_linear(a, b, s);
}

AffinePair<double> affine_rep(double x, double tol) {
  CaseTag tag = classify(x, tol);
  if (std::abs(x) <= tol) throw NoAffineDeformation();
  if (tag == CaseTag::Case2_boundary) throw TrivialDeformation();
  auto [a, b] = real_linear_rep(x, tol);
  return affine_from_linear(a, b, s_of(a.w()));
}

GeometricInvariants geometric_invariants(double x, double tol) {
  GeometricInvariants g;
  g.tag = classify(x, tol);
  if (g.tag == CaseTag::Case2_boundary) {
    g.alpha = 2 * std::acos(x);
    return g;
  }
  auto [a, b] = real_linear_rep(x, tol);
  const auto& p = a.params();
  PureVector<double> am = a.pure();
  PureVector<double> bm = b.pure();
  switch (g.tag) {
    case CaseTag::Case1_spherical:
      g.alpha = 2 * std::acos(a.w());
      g.omega = std::acos(pure_cos(am, bm, p));
      break;
    case CaseTag::Case3_elliptic_lorentz:
      g.alpha = 2 * std::acos(a.w());
      g.d = std::acosh(pure_cos(am, bm, p));
      break;
    case CaseTag::Case5_hyperbolic:
      g.partial = 2 * std::acosh(std::abs(a.w()));
      g.d = std::acosh(pure_cos(am, bm, p));
      break;
    default: break;
  }
  if (std::abs(x) > tol && g.tag != CaseTag::Case4_parabolic) {
    auto [ra, rb] = affine_from_linear(a, b, s_of(a.w()));
    ShiftData<double> sa = shift_decompose(ra, tol);
    g.sigma = sa.sigma;
    if (g.tag == CaseTag::Case1_spherical) {
      ShiftData<double> sb = shift_decompose(rb, tol);
      if (sa.axis_point && sb.axis_point)
        g.delta_axis = line_distance(*sa.axis_point, sa.axis_direction, *sb.axis_point, sb.axis_direction);
    }
  }
  return g;
}

TrigCheck cone_trig_check(double x, double tol) {
  CaseTag tag = classify(x, tol);
  if (tag == CaseTag::Case2_boundary || tag == CaseTag::Case4_parabolic)
    throw Unsupported(std::string("no cone-manifold identity in ") + to_string(tag));
  auto [a, b] = real_linear_rep(x, tol);
  double c = (trace3(so3_matrix(a, tol)) - 1) / 2;  // cos(alpha) or cosh(partial)
  double half_sq = (1 + c) / 2;                      // cos^2(alpha/2) or cosh^2(partial/2)
  double lhs = tag == CaseTag::Case5_hyperbolic ? (half_sq - 0.5) / (half_sq - 1) : (half_sq - 0.5) / (1 - half_sq);
  double rhs = pure_cos(a.pure(), b.pure(), a.params());
  return {lhs, rhs, lhs - rhs};
}

std::optional<Complex> PlaneMap::fixed_point(double tol) const {
  Complex den = Complex(1, 0) - rot;
  if (std::abs(den) <= tol) return std::nullopt;
  return trans / den;
}

std::pair<PlaneMap, PlaneMap> case2_plane_action() {
  const double pi = std::acos(-1.0);
  Complex r = std::polar(1.0, pi / 3);
  return {PlaneMap{r, {0, 0}}, PlaneMap{r, std::polar(1.0, pi / 6)}};
}

}  // namespace trefoil
