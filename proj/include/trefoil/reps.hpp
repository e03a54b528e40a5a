#pragma once

// Representations of G = <a, b | aba = bab> into unit quaternions and their
// affine deformations, parameterized by x = A^+ = B^+.

#include <functional>
#include <optional>
#include <utility>
#include <variant>

#include "trefoil/affine.hpp"
#include "trefoil/words.hpp"

namespace trefoil {

enum class CaseTag { Case1_spherical, Case2_boundary, Case3_elliptic_lorentz, Case4_parabolic, Case5_hyperbolic };

const char* to_string(CaseTag c);
int case_number(CaseTag c);
CaseTag classify(double x, double tol = kDefaultTol);

/// y(x) = (2x^2 - 1)/2
inline double y_of(double x) { return (2 * x * x - 1) / 2; }
/// s(x) = (3 - 4x^2)/(4x)
double s_of(double x);

/// A point (x, y, s) on the trefoil varieties.
struct RepPoint {
  double x = 0;
  double y = 0;
  std::optional<double> s;
  CaseTag tag = CaseTag::Case1_spherical;

  /// Throws NoAffineDeformation at x = 0 when affine is requested.
  static RepPoint make(double x, bool affine, double tol = kDefaultTol);
};

template <class T>
using QPair = std::pair<Quaternion<T>, Quaternion<T>>;
template <class T>
using AffinePair = std::pair<AffineIsometry<T>, AffineIsometry<T>>;

struct LinearRep {
  CaseTag tag;
  std::variant<QPair<double>, QPair<Complex>> pair;

  bool is_complex() const { return pair.index() == 1; }
  const QPair<double>& real() const { return std::get<0>(pair); }
  const QPair<Complex>& complex() const { return std::get<1>(pair); }
};

LinearRep linear_rep(double x, double tol = kDefaultTol);
/// Real pair for every case except 2.
QPair<double> real_linear_rep(double x, double tol = kDefaultTol);
/// The complex pair at x = +-sqrt(3)/2 in M(2, C).
QPair<Complex> case2_linear_rep(int sign);
/// A = +-1 + i + j, B = +-1 + (y/2)(i - j), exactly.
QPair<Rational> case4_linear_rep(int sign);

/// rho(a) = (s A^-, A), rho(b) = (s B^- + (A^- B^-)^-, B).
template <class T>
AffinePair<T> affine_from_linear(const Quaternion<T>& a, const Quaternion<T>& b, const T& s) {
  PureVector<T> am = a.pure();
  PureVector<T> bm = b.pure();
  const auto& p = a.params();
  PureVector<T> cross = (as_quaternion(am, p) * as_quaternion(bm, p)).pure();
  return {AffineIsometry<T>(s * am, a), AffineIsometry<T>(s * bm + cross, b)};
}

/// Throws NoAffineDeformation at x = 0 and TrivialDeformation at |x| = sqrt(3)/2.
AffinePair<double> affine_rep(double x, double tol = kDefaultTol);
/// Rational affine pair at x = +-1.
AffinePair<Rational> case4_affine_rep(int sign);

struct GeometricInvariants {
  CaseTag tag;
  std::optional<double> alpha;       // rotation angle of A, cases 1-3
  std::optional<double> partial;     // translation length of A, case 5
  std::optional<double> omega;       // angle between the axes of A and B, case 1
  std::optional<double> d;           // distance between the axes, cases 3 and 5
  std::optional<double> delta_axis;  // Euclidean distance between the affine axes, case 1
  std::optional<double> sigma;       // shift of rho(a)
};

/// Invariants read off the constructed pairs (not from the closed forms).
GeometricInvariants geometric_invariants(double x, double tol = kDefaultTol);

struct TrigCheck {
  double lhs;  // cone-angle formula evaluated on the trace-derived angle
  double rhs;  // cos(omega) or cosh(d) from the quaternion inner products
  double difference;
};

/// Cases 1, 3 and 5 only.
TrigCheck cone_trig_check(double x, double tol = kDefaultTol);

template <class T>
struct ElementImages {
  T F, D, C;
};

/// F = ab, D = aba, C = D^2.
template <class G>
ElementImages<G> element_images(const G& ga, const G& gb) {
  G f = ga * gb;
  G d = f * ga;
  return {f, d, d * d};
}

/// z -> rot z + trans on the complex plane.
struct PlaneMap {
  Complex rot{1, 0};
  Complex trans{0, 0};

  Complex operator()(Complex z) const { return rot * z + trans; }
  /// (l o r)(z) = l(r(z))
  friend PlaneMap operator*(const PlaneMap& l, const PlaneMap& r) { return {l.rot * r.rot, l.rot * r.trans + l.trans}; }
  double angle() const { return std::arg(rot); }
  std::optional<Complex> fixed_point(double tol = kDefaultTol) const;
};

/// a(z) = e^{i pi/3} z and b(z) = e^{i pi/3} z + e^{i pi/6}: rotations by pi/3 about 0 and i.
std::pair<PlaneMap, PlaneMap> case2_plane_action();

}  // namespace trefoil
