#pragma once

// Arithmetic in the quaternion algebra (mu, nu / k): i^2 = mu, j^2 = nu, ij = -ji.
//
// Pure quaternions carry fixed coordinates (X, Y, Z) on the ordered basis
// {-ij, j, i}. Every 3x3 and 4x4 matrix produced by the library uses these
// coordinates, so for a pure part b*i + c*j + d*ij we have X = -d, Y = c, Z = b.
// With mu = -1 the norm form reads X^2+Y^2+Z^2 (Hamilton) or -X^2-Y^2+Z^2
// (Split), making Z the timelike direction of Minkowski space.

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "trefoil/errors.hpp"
#include "trefoil/matrix.hpp"
#include "trefoil/scalar.hpp"

namespace trefoil {

enum class FieldTag { real, complex };

template <class T>
struct AlgebraParams {
  T mu{-1};
  T nu{-1};
  FieldTag field = FieldTag::real;

  friend bool operator==(const AlgebraParams& l, const AlgebraParams& r) {
    return l.mu == r.mu && l.nu == r.nu && l.field == r.field;
  }
  friend bool operator!=(const AlgebraParams& l, const AlgebraParams& r) { return !(l == r); }
};

template <class T>
AlgebraParams<T> hamilton() {
  static_assert(!is_complex_v<T>, "Hamilton quaternions are real only");
  return {T(-1), T(-1), FieldTag::real};
}

/// M(2,k) = (-1, 1 / k); complex scalars give M(2,C).
template <class T>
AlgebraParams<T> split() {
  return {T(-1), T(1), is_complex_v<T> ? FieldTag::complex : FieldTag::real};
}

inline bool is_hamilton(const AlgebraParams<double>& p) { return p.mu == -1.0 && p.nu == -1.0; }

/// Element of H_0 stored by its coefficients on i, j, ij.
template <class T>
struct PureVector {
  T bi{0};
  T cj{0};
  T dij{0};

  static PureVector from_coords(const T& X, const T& Y, const T& Z) { return {Z, Y, T(-X)}; }
  static PureVector from_coords(const Vec3<T>& v) { return from_coords(v[0], v[1], v[2]); }
  Vec3<T> coords() const { return {T(-dij), cj, bi}; }

  PureVector operator-() const { return {T(-bi), T(-cj), T(-dij)}; }
  friend PureVector operator+(const PureVector& l, const PureVector& r) {
    return {T(l.bi + r.bi), T(l.cj + r.cj), T(l.dij + r.dij)};
  }
  friend PureVector operator-(const PureVector& l, const PureVector& r) {
    return {T(l.bi - r.bi), T(l.cj - r.cj), T(l.dij - r.dij)};
  }
  friend PureVector operator*(const T& s, const PureVector& v) { return {T(s * v.bi), T(s * v.cj), T(s * v.dij)}; }
  friend bool operator==(const PureVector& l, const PureVector& r) {
    return l.bi == r.bi && l.cj == r.cj && l.dij == r.dij;
  }
  friend bool operator!=(const PureVector& l, const PureVector& r) { return !(l == r); }

  bool is_zero(double tol = kDefaultTol) const {
    return trefoil::is_zero(bi, tol) && trefoil::is_zero(cj, tol) && trefoil::is_zero(dij, tol);
  }
};

template <class T>
double max_abs_diff(const PureVector<T>& l, const PureVector<T>& r) {
  return std::max({magnitude(T(l.bi - r.bi)), magnitude(T(l.cj - r.cj)), magnitude(T(l.dij - r.dij))});
}

template <class T>
class Quaternion {
 public:
  Quaternion() = default;
  explicit Quaternion(AlgebraParams<T> p) : params_(p) {}
  Quaternion(T w, T b, T c, T d, AlgebraParams<T> p) : w_(w), b_(b), c_(c), d_(d), params_(p) {}
  Quaternion(T w, const PureVector<T>& v, AlgebraParams<T> p) : w_(w), b_(v.bi), c_(v.cj), d_(v.dij), params_(p) {}

  static Quaternion one(AlgebraParams<T> p) { return Quaternion(T(1), T(0), T(0), T(0), p); }

  const T& w() const { return w_; }
  const T& bi() const { return b_; }
  const T& cj() const { return c_; }
  const T& dij() const { return d_; }
  const AlgebraParams<T>& params() const { return params_; }

  /// A^+ (scalar part).
  const T& scalar() const { return w_; }
  /// A^- (pure part).
  PureVector<T> pure() const { return {b_, c_, d_}; }

  Quaternion conjugate() const { return Quaternion(w_, T(-b_), T(-c_), T(-d_), params_); }
  T trace() const { return T(2) * w_; }
  T norm() const {
    const T& mu = params_.mu;
    const T& nu = params_.nu;
    return w_ * w_ - b_ * b_ * mu - c_ * c_ * nu + d_ * d_ * mu * nu;
  }
  Quaternion inverse() const {
    T n = norm();
    if (trefoil::is_zero(n, 0.0)) throw DomainError("quaternion of norm zero has no inverse");
    Quaternion c = conjugate();
    return Quaternion(c.w_ / n, c.b_ / n, c.c_ / n, c.d_ / n, params_);
  }

  Quaternion operator-() const { return Quaternion(T(-w_), T(-b_), T(-c_), T(-d_), params_); }
  friend Quaternion operator+(const Quaternion& l, const Quaternion& r) {
    check_same(l, r);
    return Quaternion(l.w_ + r.w_, l.b_ + r.b_, l.c_ + r.c_, l.d_ + r.d_, l.params_);
  }
  friend Quaternion operator-(const Quaternion& l, const Quaternion& r) { return l + (-r); }
  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return Quaternion(s * q.w_, s * q.b_, s * q.c_, s * q.d_, q.params_);
  }
  friend Quaternion operator*(const Quaternion& l, const Quaternion& r) {
    check_same(l, r);
    const T& mu = l.params_.mu;
    const T& nu = l.params_.nu;
    const T &a0 = l.w_, &a1 = l.b_, &a2 = l.c_, &a3 = l.d_;
    const T &b0 = r.w_, &b1 = r.b_, &b2 = r.c_, &b3 = r.d_;
    return Quaternion(a0 * b0 + mu * a1 * b1 + nu * a2 * b2 - mu * nu * a3 * b3,
                      a0 * b1 + a1 * b0 - nu * a2 * b3 + nu * a3 * b2,
                      a0 * b2 + a2 * b0 + mu * a1 * b3 - mu * a3 * b1,
                      a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1, l.params_);
  }
  friend bool operator==(const Quaternion& l, const Quaternion& r) {
    return l.params_ == r.params_ && l.w_ == r.w_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const Quaternion& l, const Quaternion& r) { return !(l == r); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w_ << ") + (" << q.b_ << ")i + (" << q.c_ << ")j + (" << q.d_ << ")ij";
  }

 private:
  static void check_same(const Quaternion& l, const Quaternion& r) {
    if (l.params_ != r.params_) throw IncompatibleAlgebras();
  }

  T w_{0}, b_{0}, c_{0}, d_{0};
  AlgebraParams<T> params_{};
};

template <class T>
double max_abs_diff(const Quaternion<T>& l, const Quaternion<T>& r) {
  return std::max({magnitude(T(l.w() - r.w())), magnitude(T(l.bi() - r.bi())), magnitude(T(l.cj() - r.cj())),
                   magnitude(T(l.dij() - r.dij()))});
}

template <class T>
Quaternion<T> as_quaternion(const PureVector<T>& v, const AlgebraParams<T>& p) {
  return Quaternion<T>(T(0), v, p);
}

/// Bilinear form <P,Q> = (N(P+Q) - N(P) - N(Q)) / 2 on H_0.
template <class T>
T form(const PureVector<T>& p, const PureVector<T>& q, const AlgebraParams<T>& ap) {
  return T(-ap.mu * p.bi * q.bi) - ap.nu * p.cj * q.cj + ap.mu * ap.nu * p.dij * q.dij;
}

template <class T>
T norm(const PureVector<T>& p, const AlgebraParams<T>& ap) {
  return form(p, p, ap);
}

template <class T>
bool is_unit(const Quaternion<T>& q, double tol = kDefaultTol) {
  return trefoil::is_zero(T(q.norm() - T(1)), tol);
}

template <class T>
void require_unit(const Quaternion<T>& q, double tol = kDefaultTol) {
  if (!is_unit(q, tol)) {
    if constexpr (is_exact_v<T>) {
      throw NotUnit("exact norm differs from 1");
    } else {
      throw NotUnit("|N(A) - 1| = " + std::to_string(magnitude(T(q.norm() - T(1)))));
    }
  }
}

/// A P conj(A) for any A; for units this is the isometry c(A).
template <class T>
PureVector<T> conjugation_raw(const Quaternion<T>& a, const PureVector<T>& p) {
  return (a * as_quaternion(p, a.params()) * a.conjugate()).pure();
}

template <class T>
PureVector<T> conj_action(const Quaternion<T>& a, const PureVector<T>& p, double tol = kDefaultTol) {
  require_unit(a, tol);
  return conjugation_raw(a, p);
}

/// Matrix of P -> A P conj(A) in (X, Y, Z) coordinates, without a unit check.
template <class T>
Mat3<T> linear_matrix(const Quaternion<T>& a) {
  Mat3<T> m = Mat3<T>::zero();
  for (std::size_t k = 0; k < 3; ++k) {
    Vec3<T> e{T(0), T(0), T(0)};
    e[k] = T(1);
    Vec3<T> col = conjugation_raw(a, PureVector<T>::from_coords(e)).coords();
    for (std::size_t i = 0; i < 3; ++i) m.a[i][k] = col[i];
  }
  return m;
}

/// Matrix of c(A) in the basis {-ij, j, i}.
template <class T>
Mat3<T> so3_matrix(const Quaternion<T>& a, double tol = kDefaultTol) {
  require_unit(a, tol);
  return linear_matrix(a);
}

/// Embedding of (-1, 1 / k) into M(2, k):
///   w + b I + c J + d IJ  ->  [[w + d, b + c], [c - b, w - d]]
/// so I = [[0,1],[-1,0]], J = [[0,1],[1,0]], IJ = diag(1,-1). The Case-2
/// quaternions at x = sqrt(3)/2 go to a lower-triangular pair.
/// Trace and determinant are the quaternion trace and norm.
template <class T>
Mat<T, 2, 2> to_matrix2(const Quaternion<T>& q) {
  const auto& p = q.params();
  if (!(p.mu == T(-1) && p.nu == T(1))) throw Unsupported("to_matrix2 needs the split algebra (-1, 1)");
  Mat<T, 2, 2> m;
  m.a[0] = {T(q.w() + q.dij()), T(q.bi() + q.cj())};
  m.a[1] = {T(q.cj() - q.bi()), T(q.w() - q.dij())};
  return m;
}

}  // namespace trefoil
