#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "trefoil/scalar.hpp"

namespace trefoil {

/// Small dense row-major matrix with compile-time shape.
template <class T, std::size_t R, std::size_t C>
struct Mat {
  std::array<std::array<T, C>, R> a{};

  static Mat zero() {
    Mat m;
    for (auto& row : m.a) row.fill(T(0));
    return m;
  }
  static Mat identity() {
    static_assert(R == C);
    Mat m = zero();
    for (std::size_t i = 0; i < R; ++i) m.a[i][i] = T(1);
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  friend bool operator==(const Mat& l, const Mat& r) { return l.a == r.a; }
  friend bool operator!=(const Mat& l, const Mat& r) { return !(l == r); }

  friend Mat operator+(const Mat& l, const Mat& r) {
    Mat m;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) m.a[i][j] = l.a[i][j] + r.a[i][j];
    return m;
  }
  friend Mat operator-(const Mat& l, const Mat& r) {
    Mat m;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) m.a[i][j] = l.a[i][j] - r.a[i][j];
    return m;
  }
};

template <class T, std::size_t R, std::size_t K, std::size_t C>
Mat<T, R, C> operator*(const Mat<T, R, K>& l, const Mat<T, K, C>& r) {
  Mat<T, R, C> m = Mat<T, R, C>::zero();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      if (is_zero(l.a[i][k], 0.0)) continue;
      for (std::size_t j = 0; j < C; ++j) m.a[i][j] += l.a[i][k] * r.a[k][j];
    }
  return m;
}

template <class T>
using Mat3 = Mat<T, 3, 3>;
template <class T>
using Mat4 = Mat<T, 4, 4>;
template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
Vec3<T> operator*(const Mat3<T>& m, const Vec3<T>& v) {
  Vec3<T> r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = m.a[i][0] * v[0] + m.a[i][1] * v[1] + m.a[i][2] * v[2];
  return r;
}

template <class T>
T det3(const Mat3<T>& m) {
  const auto& a = m.a;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

template <class T>
T trace3(const Mat3<T>& m) {
  return m.a[0][0] + m.a[1][1] + m.a[2][2];
}

/// Largest entrywise |l - r|, as a double.
template <class T, std::size_t R, std::size_t C>
double max_abs_diff(const Mat<T, R, C>& l, const Mat<T, R, C>& r) {
  double d = 0;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) d = std::max(d, magnitude(T(l.a[i][j] - r.a[i][j])));
  return d;
}

template <class T, std::size_t R, std::size_t C>
Mat<double, R, C> to_double(const Mat<T, R, C>& m) {
  Mat<double, R, C> d;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) d.a[i][j] = to_double(m.a[i][j]);
  return d;
}

template <class T, std::size_t R, std::size_t C>
std::ostream& operator<<(std::ostream& os, const Mat<T, R, C>& m) {
  for (std::size_t i = 0; i < R; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < C; ++j) os << (j ? ", " : "") << m.a[i][j];
    os << (i + 1 == R ? "]" : "\n");
  }
  return os;
}

/// Solution set of a linear system: particular + span(nullspace), or empty.
template <class T>
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<T> particular;
  std::vector<std::vector<T>> nullspace;
};

/// Gauss-Jordan elimination on an m x n system. Pivots are exact in exact
/// mode and chosen by largest magnitude (dead zone tol) otherwise.
template <class T>
LinearSolution<T> solve_linear(std::vector<std::vector<T>> rows, std::vector<T> rhs, double tol = kDefaultTol) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    double best_mag = -1;
    for (std::size_t i = r; i < m; ++i) {
      if (is_zero(rows[i][c], tol)) continue;
      if constexpr (is_exact_v<T>) {
        best = i;
        break;
      } else {
        double mag = magnitude(rows[i][c]);
        if (mag > best_mag) {
          best_mag = mag;
          best = i;
        }
      }
    }
    if (best == m) continue;
    std::swap(rows[r], rows[best]);
    std::swap(rhs[r], rhs[best]);
    T p = rows[r][c];
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = rows[r][j] / p;
    rhs[r] = rhs[r] / p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(rows[i][c], 0.0)) continue;
      T f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
      rhs[i] = rhs[i] - f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution<T> sol;
  sol.rank = r;
  sol.consistent = true;
  for (std::size_t i = r; i < m; ++i)
    if (!is_zero(rhs[i], tol)) sol.consistent = false;
  if (!sol.consistent) return sol;
  sol.particular.assign(n, T(0));
  for (std::size_t k = 0; k < r; ++k) sol.particular[pivot_cols[k]] = rhs[k];
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) != pivot_cols.end()) continue;
    std::vector<T> v(n, T(0));
    v[c] = T(1);
    for (std::size_t k = 0; k < r; ++k) v[pivot_cols[k]] = -rows[k][c];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace trefoil
