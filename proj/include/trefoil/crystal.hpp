#pragma once

// Euclidean crystallographic images of the trefoil group: P6_1, I2_13, P4_132.
// All facts are checked with exact arithmetic.

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trefoil/affine.hpp"
#include "trefoil/reps.hpp"
#include "trefoil/words.hpp"

namespace trefoil {

enum class ElementKind { identity, translation, rotation, screw };
const char* to_string(ElementKind k);

template <class T>
struct ElementClass {
  ElementKind kind = ElementKind::identity;
  T cos_angle{1};
  Vec3<T> direction{};  // kernel of M - I for rotations and screws
  Vec3<T> shift{};      // translation along the axis (the whole translation for translations)
  std::optional<Vec3<T>> axis_point;
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[1] * b[2] - a[2] * b[1]), T(a[2] * b[0] - a[0] * b[2]), T(a[0] * b[1] - a[1] * b[0])};
}

template <class T>
Vec3<T> sub(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[0] - b[0]), T(a[1] - b[1]), T(a[2] - b[2])};
}

/// Type, angle, axis and shift of a Euclidean isometry given as a 4x4 matrix.
template <class T>
ElementClass<T> classify_element(const Mat4<T>& g, double tol = kDefaultTol) {
  ElementClass<T> c;
  Mat3<T> m = linear_block(g);
  Vec3<T> v = translation_column(g);
  bool zero_v = is_zero(v[0], tol) && is_zero(v[1], tol) && is_zero(v[2], tol);
  bool linear_identity;
  if constexpr (is_exact_v<T>) {
    linear_identity = m == Mat3<T>::identity();
  } else {
    linear_identity = max_abs_diff(m, Mat3<T>::identity()) <= tol;
  }
  if (linear_identity) {
    c.kind = zero_v ? ElementKind::identity : ElementKind::translation;
    c.shift = v;
    c.direction = v;
    return c;
  }
  c.cos_angle = (trace3(m) - T(1)) / T(2);
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<T> r(3);
    for (std::size_t j = 0; j < 3; ++j) r[j] = m.a[i][j] - (i == j ? T(1) : T(0));
    rows.push_back(r);
  }
  auto ker = solve_linear(rows, std::vector<T>(3, T(0)), tol);
  if (ker.nullspace.size() != 1) throw DomainError("not a proper rotation: fixed space has dimension " +
                                                   std::to_string(ker.nullspace.size()));
  c.direction = {ker.nullspace[0][0], ker.nullspace[0][1], ker.nullspace[0][2]};
  T k = dot(v, c.direction) / dot(c.direction, c.direction);
  c.shift = {T(k * c.direction[0]), T(k * c.direction[1]), T(k * c.direction[2])};
  Vec3<T> vp = sub(v, c.shift);
  auto r2 = rows;
  std::vector<T> rhs{T(-vp[0]), T(-vp[1]), T(-vp[2]), T(0)};
  r2.push_back({c.direction[0], c.direction[1], c.direction[2]});
  auto sol = solve_linear(r2, rhs, tol);
  if (sol.consistent) c.axis_point = Vec3<T>{sol.particular[0], sol.particular[1], sol.particular[2]};
  bool zero_shift = is_zero(c.shift[0], tol) && is_zero(c.shift[1], tol) && is_zero(c.shift[2], tol);
  c.kind = zero_shift ? ElementKind::rotation : ElementKind::screw;
  return c;
}

/// Expected facts about one element of a crystallographic group.
template <class T>
struct SampleElement {
  std::string word;
  ElementKind kind;
  T cos_angle{1};
  Vec3<T> shift{};
  std::optional<Vec3<T>> point_on_axis;
  std::optional<Vec3<T>> direction;  // up to scale
};

struct Fact {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Fact>& facts) {
  for (const auto& f : facts)
    if (!f.passed) return false;
  return !facts.empty();
}

template <class T>
struct CrystalGroupData {
  std::string name;
  AffineIsometry<T> gen_a;
  AffineIsometry<T> gen_b;
  std::vector<std::string> lattice_seed_words;  // words whose images are translations
  std::vector<SampleElement<T>> samples;
  bool longitude_trivial = false;  // whether a^-4 b a a b is expected to map to the identity
};

CrystalGroupData<Surd<3>> p61_data();
CrystalGroupData<Rational> i213_data();
CrystalGroupData<Surd<2>> p4132_data();

/// Similarity p -> scale * R p used to normalize affine_rep(1/2) into I2_13.
struct I213Similarity {
  double scale = 1.0 / 3;
  Quaternion<double> rotation;  // unit Hamilton quaternion r with c(r) = R
  Mat3<double> R;
};
I213Similarity i213_similarity();
/// affine_rep(1/2) conjugated by the similarity, in floating point.
AffinePair<double> i213_from_affine_rep();

template <class T>
AffineIsometry<T> evaluate(const CrystalGroupData<T>& d, const std::string& word) {
  return evaluate(GroupWord::parse(word), d.gen_a, d.gen_b);
}

/// Closure of the linear parts of the generators (bounded by 48 elements).
template <class T>
std::vector<Mat3<T>> point_group(const CrystalGroupData<T>& d, std::size_t limit = 48) {
  std::vector<Mat3<T>> gens{linear_matrix(d.gen_a.A), linear_matrix(d.gen_b.A)};
  std::vector<Mat3<T>> elems{Mat3<T>::identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Mat3<T> n = elems[i] * g;
      bool seen = false;
      for (const auto& e : elems)
        if (e == n) {
          seen = true;
          break;
        }
      if (!seen) {
        elems.push_back(n);
        if (elems.size() > limit) return elems;
      }
    }
  }
  return elems;
}

/// Orbit of the seed translations under the point group.
template <class T>
std::vector<Vec3<T>> lattice_vectors(const CrystalGroupData<T>& d) {
  std::vector<Vec3<T>> out;
  auto pg = point_group(d);
  for (const auto& w : d.lattice_seed_words) {
    Vec3<T> t = evaluate(d, w).v.coords();
    for (const auto& m : pg) {
      Vec3<T> r = m * t;
      bool seen = false;
      for (const auto& e : out)
        if (e == r) seen = true;
      if (!seen) out.push_back(r);
    }
  }
  return out;
}

template <class T>
std::size_t vector_rank(const std::vector<Vec3<T>>& vs) {
  if (vs.empty()) return 0;
  std::vector<std::vector<T>> rows;
  for (const auto& v : vs) rows.push_back({v[0], v[1], v[2]});
  return solve_linear(rows, std::vector<T>(rows.size(), T(0))).rank;
}

/// Covolume of the Z-span of rational vectors, via Hermite normal form.
std::optional<Rational> lattice_covolume(const std::vector<Vec3<Rational>>& vs);

template <class T>
std::optional<Rational> as_rational(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return v;
  } else if constexpr (is_surd<T>::value) {
    if (v.surd_coeff() != 0) return std::nullopt;
    return v.rational_part();
  } else {
    return std::nullopt;
  }
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class T>
std::string str(const Vec3<T>& v) {
  return "(" + str(v[0]) + ", " + str(v[1]) + ", " + str(v[2]) + ")";
}

template <class T>
bool parallel(const Vec3<T>& a, const Vec3<T>& b) {
  Vec3<T> c = cross(a, b);
  return c[0] == T(0) && c[1] == T(0) && c[2] == T(0);
}

/// Exact verification of every stored fact plus the group-level checks.
template <class T>
std::vector<Fact> verify(const CrystalGroupData<T>& d) {
  static_assert(is_exact_v<T>, "crystallographic verification is exact");
  std::vector<Fact> facts;
  auto add = [&](std::string name, bool ok, std::string detail) { facts.push_back({std::move(name), ok, std::move(detail)}); };

  add("generators are isometries", d.gen_a.A.norm() == T(1) && d.gen_b.A.norm() == T(1), "N(A) = N(B) = 1");
  auto aba = evaluate(d, "aba");
  auto bab = evaluate(d, "bab");
  add("braid relation aba = bab", aba == bab, "exact equality of affine images");

  for (const auto& s : d.samples) {
    auto g = evaluate(d, s.word);
    auto c = classify_element(affine_matrix4(g));
    bool ok = c.kind == s.kind;
    std::string detail = std::string(to_string(c.kind));
    if (s.kind == ElementKind::translation || s.kind == ElementKind::identity) {
      ok = ok && c.shift == s.shift;
      detail += " by " + str(c.shift);
    } else {
      ok = ok && c.cos_angle == s.cos_angle && c.shift == s.shift;
      detail += ", cos angle " + str(c.cos_angle) + ", shift " + str(c.shift);
      if (s.point_on_axis) {
        Vec3<T> moved = sub(g.act(*s.point_on_axis), *s.point_on_axis);
        ok = ok && moved == s.shift;
        detail += ", moves " + str(*s.point_on_axis) + " by " + str(moved);
      }
      if (s.direction) {
        ok = ok && parallel(c.direction, *s.direction);
        detail += ", axis direction " + str(c.direction);
      }
      if (c.axis_point) {
        ShiftData<T> sd = shift_decompose(g);
        Vec3<T> moved = sub(g.act(*c.axis_point), *c.axis_point);
        ok = ok && moved == c.shift && sd.shift_vector.coords() == c.shift;
      }
    }
    add(s.word, ok, detail);
  }

  auto lon = evaluate(d, "a^-4 b a a b");
  bool trivial = lon == AffineIsometry<T>::identity(d.gen_a.params()) ||
                 affine_matrix4(lon) == Mat4<T>::identity();
  add(d.longitude_trivial ? "longitude a^-4 b a a b maps to the identity"
                          : "longitude a^-4 b a a b does not map to the identity",
      trivial == d.longitude_trivial, trivial ? "identity" : "nontrivial: " + str(lon.v.coords()));

  auto pg = point_group(d);
  add("finite point group", pg.size() <= 24, "order " + std::to_string(pg.size()));
  auto lat = lattice_vectors(d);
  std::size_t rank = vector_rank(lat);
  add("full-rank translation lattice", rank == 3, "rank " + std::to_string(rank));
  return facts;
}

/// verify() plus group-specific invariants, by name: P61, I213, P4132.
std::vector<Fact> verify_crystal(const std::string& name);

/// Translational residual of rho(aba) - rho(bab) for two rotations by alpha
/// about parallel axes through 0 and (1, 0, 0), both with shift sigma.
Vec3<double> parallel_axis_residual(double alpha, double sigma);
/// (1 - 2 cos alpha)^2 sin alpha
double parallel_axis_factor(double alpha);

struct ParallelAxisResult {
  std::vector<double> factor_zeros;  // zeros of the factor in (0, 2 pi)
  std::vector<double> admissible;    // zeros of the full residual in (0, 2 pi)
  double conclusion = 0;             // pi/3: linear parts of order 6
};
ParallelAxisResult parallel_axis_analysis(double tol = kDefaultTol);

/// Permutation of {1..6}; images[i] is the image of i + 1.
struct Permutation {
  std::array<int, 6> images{1, 2, 3, 4, 5, 6};

  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
  /// (p * q)(i) = p(q(i))
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r;
    for (int i = 1; i <= 6; ++i) r.images[static_cast<std::size_t>(i - 1)] = p(q(i));
    return r;
  }
  Permutation inverse() const;
  bool is_identity() const { return *this == Permutation{}; }
  int order() const;
  std::string cycles() const;
  friend bool operator==(const Permutation& l, const Permutation& r) { return l.images == r.images; }
};

struct Sigma6 {
  Permutation F;  // (123)(456)
  Permutation D;  // (15)(24)(36)
};
Sigma6 sigma6_homomorphism();
/// Orbit of 1 under <F, D>.
std::set<int> orbit(const Sigma6& s, int start = 1);

struct FreeSubgroupCheck {
  double x;
  CaseTag tag;
  double residual_g1;  // |FDFD - b^-2|
  double residual_g2;  // |F^-1 D F^-1 D - a^2|
};
/// eval(FDFD) = eval(b^-2) and eval(F^-1 D F^-1 D) = eval(a^2) at the given x.
FreeSubgroupCheck free_subgroup_check(double x, double tol = kDefaultTol);
/// The same identities for the affine pair at x.
FreeSubgroupCheck free_subgroup_check_affine(double x, double tol = kDefaultTol);

}  // namespace trefoil
