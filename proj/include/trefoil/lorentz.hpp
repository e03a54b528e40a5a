#pragma once

// Minkowski dynamics of the Split-algebra representations. Coordinates are
// (X, Y, Z) with Q = -X^2 - Y^2 + Z^2; the future nullcone component N+ is Z > 0.

#include <optional>
#include <string>
#include <vector>

#include "trefoil/affine.hpp"
#include "trefoil/reps.hpp"
#include "trefoil/words.hpp"

namespace trefoil {

enum class LorentzClass { identity, elliptic, parabolic, hyperbolic };

const char* to_string(LorentzClass c);

/// Sign of N(A^-): timelike -> elliptic, null -> parabolic, spacelike -> hyperbolic.
template <class T>
LorentzClass classify_lorentz(const Quaternion<T>& a, double tol = kDefaultTol) {
  const auto& p = a.params();
  if (!(p.mu == T(-1) && p.nu == T(1))) throw Unsupported("classify_lorentz needs the split algebra");
  PureVector<T> am = a.pure();
  if (am.is_zero(tol)) return LorentzClass::identity;
  int sg = sign_of(norm(am, p), tol);
  if (sg > 0) return LorentzClass::elliptic;
  if (sg < 0) return LorentzClass::hyperbolic;
  return LorentzClass::parabolic;
}

/// Minkowski form in (X, Y, Z) coordinates.
double minkowski(const Vec3<double>& a, const Vec3<double>& b);

struct LorentzFrame {
  double lambda = 0;  // eigenvalue < 1
  Vec3<double> x_minus{};
  Vec3<double> x_plus{};
  Vec3<double> x_zero{};
};

/// Eigen-frame of a hyperbolic element of SO0(1,2) given by its 3x3 matrix.
LorentzFrame eigen_frame(const Mat3<double>& g, double tol = kDefaultTol);

/// Eigen-frame of c(A); the fixed direction is read from A^- itself.
LorentzFrame eigen_frame(const Quaternion<double>& a, double tol = kDefaultTol);

/// alpha(g) = Q(x0, phi(g)p - p) for any probe point p.
double margulis_alpha(const AffineIsometry<double>& phi, const Vec3<double>& probe = {0, 0, 0},
                      double tol = kDefaultTol);

/// -(3 - 4x^2) sqrt(x^2 - 1) / (2x) for x >= 1; 0 at x = sqrt(3)/2.
double alpha_g2_closed_form(double x, double tol = kDefaultTol);
/// The stated closed form for alpha(a^2 b^2), evaluated as given for x > 1.
double alpha_g3_closed_form(double x);

template <class T>
struct Line {
  Vec3<T> point;
  Vec3<T> direction;
};

/// Fixed points of phi when they form a line.
template <class T>
std::optional<Line<T>> parabolic_fixed_line(const AffineIsometry<T>& phi, double tol = kDefaultTol) {
  Mat3<T> m = linear_matrix(phi.A);
  Vec3<T> v = phi.v.coords();
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<T> r(3);
    for (std::size_t j = 0; j < 3; ++j) r[j] = m.a[i][j] - (i == j ? T(1) : T(0));
    rows.push_back(r);
    rhs.push_back(T(-v[i]));
  }
  auto sol = solve_linear(rows, rhs, tol);
  if (!sol.consistent || sol.nullspace.size() != 1) return std::nullopt;
  const auto& n = sol.nullspace[0];
  return Line<T>{{sol.particular[0], sol.particular[1], sol.particular[2]}, {n[0], n[1], n[2]}};
}

struct Witness {
  GroupWord word;
  double alpha = 0;
};

struct PropernessVerdict {
  std::string verdict;  // "not_proper" or "inconclusive"
  std::string reason;
  std::optional<Witness> witness_positive;
  std::optional<Witness> witness_negative;
  std::vector<Witness> named;  // a^2 and a^2 b^2 for the Margulis route
  std::size_t words_searched = 0;
  std::optional<double> min_alpha;
  std::optional<double> max_alpha;
  std::optional<Line<double>> fixed_line;
};

/// Default search depth over reduced words for opposite-sign Margulis witnesses.
inline constexpr std::size_t kWitnessSearchLength = 6;

PropernessVerdict properness_verdict(double x, double tol = kDefaultTol,
                                     std::size_t search_length = kWitnessSearchLength);

/// Integer n >= 3 with x = cos(pi/n), if any.
std::optional<int> cos_pi_over_n(double x, double tol = kDefaultTol);

}  // namespace trefoil
