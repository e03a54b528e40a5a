#pragma once

// Scalar backends: double, std::complex<double>, exact rationals and the
// quadratic fields Q[sqrt(d)].

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <type_traits>

#include "trefoil/errors.hpp"

namespace trefoil {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Element a + b*sqrt(D) of Q[sqrt(D)], D squarefree and positive.
template <int D>
class Surd {
  static_assert(D > 1, "Surd needs a non-square radicand");

 public:
  Surd() = default;
  Surd(long long v) : a_(v) {}  // NOLINT: integers embed implicitly
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT
  Surd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Surd root() { return Surd(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  static constexpr int radicand() { return D; }

  Surd conjugate() const { return Surd(a_, -b_); }
  /// Field norm a^2 - D b^2.
  Rational field_norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  Surd operator-() const { return Surd(-a_, -b_); }
  Surd& operator+=(const Surd& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Surd& operator-=(const Surd& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Surd& operator*=(const Surd& o) {
    Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Surd& operator/=(const Surd& o) {
    Rational n = o.field_norm();
    if (n == 0) throw DomainError("division by zero in Q[sqrt(d)]");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }
  friend Surd operator+(Surd l, const Surd& r) { return l += r; }
  friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
  friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
  friend Surd operator/(Surd l, const Surd& r) { return l /= r; }
  friend bool operator==(const Surd& l, const Surd& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator!=(const Surd& l, const Surd& r) { return !(l == r); }

  /// Exact sign of a + b sqrt(D).
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with D b^2
    Rational diff = a_ * a_ - Rational(D) * b_ * b_;
    return diff.sign() == 0 ? 0 : (diff.sign() > 0 ? sa : sb);
  }

  double to_double() const { return trefoil::to_double(a_) + trefoil::to_double(b_) * std::sqrt(double(D)); }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) {
    if (s.b_ == 0) return os << s.a_;
    if (s.a_ != 0) os << s.a_ << (s.b_.sign() > 0 ? "+" : "");
    return os << s.b_ << "*sqrt(" << D << ")";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

template <class T>
struct is_surd : std::false_type {};
template <int D>
struct is_surd<Surd<D>> : std::true_type {};

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational> || is_surd<T>::value;

template <class T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex>;

inline double to_double(double v) { return v; }
template <int D>
double to_double(const Surd<D>& s) {
  return s.to_double();
}

/// Zero test: exact equality for exact scalars, |v| <= tol otherwise.
template <class T>
bool is_zero(const T& v, double tol = kDefaultTol) {
  if constexpr (is_exact_v<T>) {
    return v == T(0);
  } else {
    return std::abs(v) <= tol;
  }
}

template <class T>
bool near(const T& a, const T& b, double tol = kDefaultTol) {
  return is_zero(T(a - b), tol);
}

/// Sign of a real scalar with a dead zone of width tol in float mode.
template <class T>
int sign_of(const T& v, double tol = kDefaultTol) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v.sign();
  } else if constexpr (is_surd<T>::value) {
    return v.sign();
  } else {
    static_assert(!is_complex_v<T>, "complex scalars have no sign");
    if (std::abs(v) <= tol) return 0;
    return v > 0 ? 1 : -1;
  }
}

/// Magnitude as a double, for reporting and tolerance checks.
template <class T>
double magnitude(const T& v) {
  if constexpr (is_exact_v<T>) {
    return std::abs(to_double(v));
  } else {
    return std::abs(v);
  }
}

}  // namespace trefoil
