#pragma once

// Affine isometries (v, A) of H_0, composed by (v,A)(w,B) = (v + c(A)w, AB).

#include <optional>

#include "trefoil/quaternion.hpp"

namespace trefoil {

/// Metric of the norm form in (X, Y, Z) coordinates: diag(mu*nu, -nu, -mu).
template <class T>
Vec3<T> form_diagonal(const AlgebraParams<T>& p) {
  return {T(p.mu * p.nu), T(-p.nu), T(-p.mu)};
}

template <class T>
T form_coords(const Vec3<T>& a, const Vec3<T>& b, const AlgebraParams<T>& p) {
  Vec3<T> g = form_diagonal(p);
  return g[0] * a[0] * b[0] + g[1] * a[1] * b[1] + g[2] * a[2] * b[2];
}

template <class T>
struct AffineIsometry {
  PureVector<T> v;
  Quaternion<T> A;

  AffineIsometry() = default;
  AffineIsometry(PureVector<T> v_, Quaternion<T> A_) : v(v_), A(A_) {}

  static AffineIsometry identity(const AlgebraParams<T>& p) { return {PureVector<T>{}, Quaternion<T>::one(p)}; }
  static AffineIsometry translation(const PureVector<T>& w, const AlgebraParams<T>& p) {
    return {w, Quaternion<T>::one(p)};
  }

  const AlgebraParams<T>& params() const { return A.params(); }

  PureVector<T> act(const PureVector<T>& u) const { return v + conjugation_raw(A, u); }
  Vec3<T> act(const Vec3<T>& u) const { return act(PureVector<T>::from_coords(u)).coords(); }

  AffineIsometry inverse() const {
    Quaternion<T> ai = A.inverse();
    return {-conjugation_raw(ai, v), ai};
  }

  friend AffineIsometry operator*(const AffineIsometry& l, const AffineIsometry& r) {
    if (l.params() != r.params()) throw IncompatibleAlgebras();
    return {l.v + conjugation_raw(l.A, r.v), l.A * r.A};
  }
  friend bool operator==(const AffineIsometry& l, const AffineIsometry& r) { return l.v == r.v && l.A == r.A; }
  friend bool operator!=(const AffineIsometry& l, const AffineIsometry& r) { return !(l == r); }

  /// Homothetic factor N(A); 1 for isometries.
  T homothetic_factor() const { return A.norm(); }
};

template <class T>
AffineIsometry<T> compose(const AffineIsometry<T>& l, const AffineIsometry<T>& r) {
  return l * r;
}

/// Affine 4x4 matrix [linear | coords(v); 0 0 0 1].
template <class T>
Mat4<T> affine_matrix4(const AffineIsometry<T>& e) {
  Mat3<T> m = linear_matrix(e.A);
  Vec3<T> t = e.v.coords();
  Mat4<T> r = Mat4<T>::identity();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = m.a[i][j];
    r.a[i][3] = t[i];
  }
  return r;
}

template <class T>
Mat3<T> linear_block(const Mat4<T>& m) {
  Mat3<T> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = m.a[i][j];
  return r;
}

template <class T>
Vec3<T> translation_column(const Mat4<T>& m) {
  return {m.a[0][3], m.a[1][3], m.a[2][3]};
}

template <class T>
double max_abs_diff(const AffineIsometry<T>& l, const AffineIsometry<T>& r) {
  return max_abs_diff(affine_matrix4(l), affine_matrix4(r));
}

enum class AxisKind { timelike, spacelike, null };

inline const char* to_string(AxisKind k) {
  switch (k) {
    case AxisKind::timelike: return "timelike";
    case AxisKind::spacelike: return "spacelike";
    case AxisKind::null: return "null";
  }
  return "?";
}

template <class T>
struct ShiftData {
  T s{0};
  PureVector<T> shift_vector;
  PureVector<T> v_perp;
  T sigma_squared{0};  // s^2 |N(A^-)|
  double sigma = 0;    // s sqrt|N(A^-)|
  AxisKind kind = AxisKind::timelike;
  Vec3<T> axis_direction{};
  std::optional<Vec3<T>> axis_point;  // empty when (M - I)p = -v_perp has no solution
};

/// v = s A^- + v_perp with <v_perp, A^-> = 0, plus a point of the invariant line.
template <class T>
ShiftData<T> shift_decompose(const AffineIsometry<T>& e, double tol = kDefaultTol) {
  PureVector<T> am = e.A.pure();
  const auto& p = e.params();
  if (am.is_zero(tol)) throw DegenerateAxis("pure translation: the linear part has no axis");
  T n = norm(am, p);
  if (is_zero(n, tol)) throw DegenerateAxis("null axis direction: the shift is undefined");

  ShiftData<T> d;
  d.s = form(e.v, am, p) / n;
  d.shift_vector = d.s * am;
  d.v_perp = e.v - d.shift_vector;
  T an = n;
  if constexpr (!is_complex_v<T>) {
    int sg = sign_of(n, tol);
    d.kind = sg > 0 ? AxisKind::timelike : AxisKind::spacelike;
    if (sg < 0) an = -n;
    d.sigma = to_double(d.s) * std::sqrt(to_double(an));
  } else {
    d.sigma = std::abs(d.s * std::sqrt(an));
  }
  d.sigma_squared = d.s * d.s * an;
  d.axis_direction = am.coords();

  Mat3<T> m = linear_matrix(e.A);
  Vec3<T> g = form_diagonal(p);
  Vec3<T> rhs_v = (-d.v_perp).coords();
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<T> r(3);
    for (std::size_t j = 0; j < 3; ++j) r[j] = m.a[i][j] - (i == j ? T(1) : T(0));
    rows.push_back(r);
    rhs.push_back(rhs_v[i]);
  }
  rows.push_back({T(g[0] * d.axis_direction[0]), T(g[1] * d.axis_direction[1]), T(g[2] * d.axis_direction[2])});
  rhs.push_back(T(0));
  auto sol = solve_linear(rows, rhs, tol);
  if (sol.consistent) d.axis_point = Vec3<T>{sol.particular[0], sol.particular[1], sol.particular[2]};
  return d;
}

/// (v_perp, 1)(s A^-, A), which equals e.
template <class T>
AffineIsometry<T> recompose(const ShiftData<T>& d, const Quaternion<T>& a) {
  return AffineIsometry<T>::translation(d.v_perp, a.params()) * AffineIsometry<T>(d.shift_vector, a);
}

}  // namespace trefoil
