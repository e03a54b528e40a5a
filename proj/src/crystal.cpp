#include "trefoil/crystal.hpp"

#include <cmath>
#include <numeric>

namespace trefoil {

namespace {

template <class T>
PureVector<T> pv(T x, T y, T z) {
  return PureVector<T>::from_coords(x, y, z);
}

template <class T>
SampleElement<T> translation_sample(std::string w, Vec3<T> t) {
  return {std::move(w), ElementKind::translation, T(1), t, std::nullopt, std::nullopt};
}

template <class T>
SampleElement<T> axis_sample(std::string w, ElementKind k, T cos_angle, Vec3<T> shift,
                             std::optional<Vec3<T>> point = std::nullopt,
                             std::optional<Vec3<T>> dir = std::nullopt) {
  return {std::move(w), k, cos_angle, shift, point, dir};
}

Mat3<double> frame(const Vec3<double>& a, const Vec3<double>& b) {
  auto unit = [](Vec3<double> v) {
    double n = std::sqrt(dot(v, v));
    return Vec3<double>{v[0] / n, v[1] / n, v[2] / n};
  };
  Vec3<double> e1 = unit(a);
  double k = dot(b, e1);
  Vec3<double> e2 = unit({b[0] - k * e1[0], b[1] - k * e1[1], b[2] - k * e1[2]});
  Vec3<double> e3 = cross(e1, e2);
  Mat3<double> m;
  for (std::size_t i = 0; i < 3; ++i) {
    m.a[i][0] = e1[i];
    m.a[i][1] = e2[i];
    m.a[i][2] = e3[i];
  }
  return m;
}

Mat3<double> transpose(const Mat3<double>& m) {
  Mat3<double> t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.a[i][j] = m.a[j][i];
  return t;
}

Mat4<double> rotation_about_parallel_axis(double alpha, double sigma, double x0) {
  double c = std::cos(alpha), s = std::sin(alpha);
  Mat4<double> m = Mat4<double>::identity();
  m.a[0] = {c, -s, 0, x0 * (1 - c)};
  m.a[1] = {s, c, 0, -x0 * s};
  m.a[2] = {0, 0, 1, sigma};
  return m;
}

}  // namespace

const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::identity: return "identity";
    case ElementKind::translation: return "translation";
    case ElementKind::rotation: return "rotation";
    case ElementKind::screw: return "screw";
  }
  return "?";
}

CrystalGroupData<Surd<3>> p61_data() {
  using S = Surd<3>;
  auto p = hamilton<S>();
  const S half = rat(1, 2);
  const S r3_2(Rational(0), rat(1, 2));
  const S r3_4(Rational(0), rat(1, 4));
  Quaternion<S> a(r3_2, half, S(0), S(0), p);
  CrystalGroupData<S> d;
  d.name = "P61";
  d.gen_a = {pv<S>(0, 0, S(rat(1, 6))), a};
  d.gen_b = {pv<S>(S(rat(3, 2)), -r3_2, S(rat(1, 6))), a};
  d.lattice_seed_words = {"a^6", "b a^-1"};
  Vec3<S> z{0, 0, 1};
  d.samples = {
      translation_sample<S>("a^6", {0, 0, 1}),
      translation_sample<S>("b^6", {0, 0, 1}),
      axis_sample<S>("a", ElementKind::screw, half, {0, 0, S(rat(1, 6))}, Vec3<S>{0, 0, 0}, z),
      axis_sample<S>("aba", ElementKind::screw, S(-1), {0, 0, half}, Vec3<S>{S(rat(3, 4)), r3_4, 0}, z),
      translation_sample<S>("abaaba", {0, 0, 1}),
      axis_sample<S>("ab", ElementKind::screw, -half, {0, 0, S(rat(1, 3))}, Vec3<S>{half, r3_2, 0}, z),
  };
  d.longitude_trivial = true;
  return d;
}

CrystalGroupData<Rational> i213_data() {
  using R = Rational;
  auto p = hamilton<R>();
  const R h = rat(1, 2);
  CrystalGroupData<R> d;
  d.name = "I213";
  d.gen_a = {pv<R>(rat(1, 6), rat(1, 6), rat(1, 6)), Quaternion<R>(h, h, h, -h, p)};
  d.gen_b = {pv<R>(rat(1, 6), 0, rat(-1, 3)), Quaternion<R>(h, -h, -h, -h, p)};
  d.lattice_seed_words = {"a^3"};
  Vec3<R> zero{0, 0, 0};
  d.samples = {
      translation_sample<R>("a^3", {h, h, h}),
      axis_sample<R>("a", ElementKind::screw, -h, {rat(1, 6), rat(1, 6), rat(1, 6)}, zero, Vec3<R>{1, 1, 1}),
      axis_sample<R>("b", ElementKind::screw, -h, {rat(1, 6), rat(-1, 6), rat(-1, 6)}, std::nullopt,
                     Vec3<R>{1, -1, -1}),
      axis_sample<R>("ab", ElementKind::rotation, -h, zero),
      axis_sample<R>("ba", ElementKind::rotation, -h, zero),
      axis_sample<R>("aab", ElementKind::rotation, R(-1), zero),
      axis_sample<R>("aba", ElementKind::rotation, R(-1), zero),
      axis_sample<R>("b a^-1", ElementKind::screw, R(-1), {0, 0, -h}),
  };
  d.longitude_trivial = false;
  return d;
}

CrystalGroupData<Surd<2>> p4132_data() {
  using S = Surd<2>;
  auto p = hamilton<S>();
  const S r2_2(Rational(0), rat(1, 2));
  const S q = rat(1, 4);
  CrystalGroupData<S> d;
  d.name = "P4132";
  d.gen_a = {pv<S>(q, -q, q), Quaternion<S>(r2_2, r2_2, S(0), S(0), p)};
  d.gen_b = {pv<S>(-q, q, q), Quaternion<S>(r2_2, S(0), r2_2, S(0), p)};
  d.lattice_seed_words = {"a^4", "b^4"};
  Vec3<S> zero{0, 0, 0};
  d.samples = {
      translation_sample<S>("a^4", {0, 0, 1}),
      translation_sample<S>("b^4", {0, 1, 0}),
      axis_sample<S>("a", ElementKind::screw, S(0), {0, 0, q}, Vec3<S>{q, 0, 0}, Vec3<S>{0, 0, 1}),
      axis_sample<S>("ba", ElementKind::rotation, S(rat(-1, 2)), zero, zero, Vec3<S>{1, 1, 1}),
      axis_sample<S>("aba", ElementKind::rotation, S(-1), zero, Vec3<S>{S(rat(1, 8)), 0, q}, Vec3<S>{0, 1, 1}),
  };
  d.longitude_trivial = false;
  return d;
}

I213Similarity i213_similarity() {
  auto [a, b] = real_linear_rep(0.5);
  double r3 = std::sqrt(3.0);
  Mat3<double> src = frame(a.pure().coords(), b.pure().coords());
  Mat3<double> dst = frame({1 / r3, 1 / r3, 1 / r3}, {1 / r3, -1 / r3, -1 / r3});
  I213Similarity s;
  s.R = dst * transpose(src);
  const auto& m = s.R.a;
  double w = std::sqrt(std::max(0.0, 1 + trace3(s.R))) / 2;
  Vec3<double> u{(m[2][1] - m[1][2]) / (4 * w), (m[0][2] - m[2][0]) / (4 * w), (m[1][0] - m[0][1]) / (4 * w)};
  auto p = hamilton<double>();
  Quaternion<double> q(w, PureVector<double>::from_coords(u), p);
  if (max_abs_diff(linear_matrix(q), s.R) > 1e-9) q = q.conjugate();
  s.rotation = q;
  return s;
}

AffinePair<double> i213_from_affine_rep() {
  I213Similarity s = i213_similarity();
  auto [ra, rb] = affine_rep(0.5);
  // the equiform element (0, r / sqrt(3)) acts as p -> (1/3) R p
  AffineIsometry<double> sim(PureVector<double>{}, std::sqrt(s.scale) * s.rotation);
  AffineIsometry<double> inv = sim.inverse();
  return {sim * ra * inv, sim * rb * inv};
}

std::optional<Rational> lattice_covolume(const std::vector<Vec3<Rational>>& vs) {
  BigInt l = 1;
  for (const auto& v : vs)
    for (const auto& c : v) {
      BigInt den = boost::multiprecision::denominator(c);
      l = l / boost::multiprecision::gcd(l, den) * den;
    }
  std::vector<std::array<BigInt, 3>> rows;
  for (const auto& v : vs) {
    std::array<BigInt, 3> r;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = v[i] * Rational(l);
      r[i] = boost::multiprecision::numerator(s);
    }
    rows.push_back(r);
  }
  BigInt det = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < 3; ++col) {
    // Euclid on column col among rows[top..]
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col]))) piv = i;
      if (piv == rows.size()) return std::nullopt;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        BigInt f = rows[i][col] / rows[top][col];
        for (std::size_t j = 0; j < 3; ++j) rows[i][j] -= f * rows[top][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    det *= rows[top][col];
    ++top;
  }
  Rational vol(det < 0 ? BigInt(-det) : det);
  return vol / Rational(l * l * l);
}

Vec3<double> parallel_axis_residual(double alpha, double sigma) {
  Mat4<double> a = rotation_about_parallel_axis(alpha, sigma, 0);
  Mat4<double> b = rotation_about_parallel_axis(alpha, sigma, 1);
  Mat4<double> r = a * b * a - b * a * b;
  return translation_column(r);
}

double parallel_axis_factor(double alpha) {
  double c = 1 - 2 * std::cos(alpha);
  return c * c * std::sin(alpha);
}

ParallelAxisResult parallel_axis_analysis(double tol) {
  const double pi = std::acos(-1.0);
  ParallelAxisResult r;
  // cos(alpha) = 1/2 or sin(alpha) = 0
  r.factor_zeros = {pi / 3, pi, 5 * pi / 3};
  for (double a : r.factor_zeros) {
    if (std::abs(parallel_axis_factor(a)) > tol) continue;
    Vec3<double> res = parallel_axis_residual(a, 1.0 / 6);
    if (std::abs(res[0]) <= tol && std::abs(res[1]) <= tol && std::abs(res[2]) <= tol) r.admissible.push_back(a);
  }
  r.conclusion = pi / 3;
  return r;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  Permutation p;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > 6) throw DomainError("permutation point out of range");
      p.images[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
    }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (int i = 1; i <= 6; ++i) r.images[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return r;
}

int Permutation::order() const {
  Permutation p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

std::string Permutation::cycles() const {
  std::string out;
  std::array<bool, 6> seen{};
  for (int i = 1; i <= 6; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
    out += "(";
    int j = i;
    do {
      seen[static_cast<std::size_t>(j - 1)] = true;
      out += std::to_string(j);
      j = (*this)(j);
    } while (j != i);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Sigma6 sigma6_homomorphism() {
  return {Permutation::from_cycles({{1, 2, 3}, {4, 5, 6}}), Permutation::from_cycles({{1, 5}, {2, 4}, {3, 6}})};
}

std::set<int> orbit(const Sigma6& s, int start) {
  std::set<int> seen{start};
  std::vector<int> todo{start};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (const Permutation* p : {&s.F, &s.D}) {
      int j = (*p)(i);
      if (seen.insert(j).second) todo.push_back(j);
    }
  }
  return seen;
}

namespace {

template <class G>
std::pair<double, double> free_residuals(const G& ga, const G& gb) {
  auto e = element_images(ga, gb);
  G fi = e.F.inverse();
  G g1 = e.F * e.D * e.F * e.D;
  G g2 = fi * e.D * fi * e.D;
  G bi = gb.inverse();
  return {max_abs_diff(g1, bi * bi), max_abs_diff(g2, ga * ga)};
}

}  // namespace

FreeSubgroupCheck free_subgroup_check(double x, double tol) {
  LinearRep rep = linear_rep(x, tol);
  FreeSubgroupCheck c{x, rep.tag, 0, 0};
  auto r = rep.is_complex() ? free_residuals(rep.complex().first, rep.complex().second)
                            : free_residuals(rep.real().first, rep.real().second);
  c.residual_g1 = r.first;
  c.residual_g2 = r.second;
  return c;
}

FreeSubgroupCheck free_subgroup_check_affine(double x, double tol) {
  auto [ra, rb] = affine_rep(x, tol);
  auto r = free_residuals(ra, rb);
  return {x, classify(x, tol), r.first, r.second};
}

namespace {

template <class T>
void append_lattice_facts(const CrystalGroupData<T>& d, std::vector<Fact>& facts, std::optional<Rational> expected) {
  if (!expected) return;
  std::vector<Vec3<Rational>> rv;
  for (const auto& v : lattice_vectors(d)) {
    Vec3<Rational> r;
    for (std::size_t i = 0; i < 3; ++i) {
      auto q = as_rational(v[i]);
      if (!q) return;
      r[i] = *q;
    }
    rv.push_back(r);
  }
  auto vol = lattice_covolume(rv);
  facts.push_back({"lattice covolume " + str(*expected), vol && *vol == *expected,
                   vol ? "covolume " + str(*vol) : std::string("rank deficient")});
}

}  // namespace

std::vector<Fact> verify_crystal(const std::string& name) {
  if (name == "P61") return verify(p61_data());
  if (name == "P4132") {
    auto d = p4132_data();
    auto facts = verify(d);
    append_lattice_facts(d, facts, Rational(1));
    return facts;
  }
  if (name == "I213") {
    auto d = i213_data();
    auto facts = verify(d);
    append_lattice_facts(d, facts, rat(1, 2));
    auto p = d.gen_a.params();
    PureVector<Rational> am = d.gen_a.A.pure(), bm = d.gen_b.A.pure();
    Rational cos_omega = form(am, bm, p) / norm(am, p);
    facts.push_back({"cos omega = -1/3", cos_omega == rat(-1, 3) && norm(am, p) == norm(bm, p),
                     "cos omega = " + str(cos_omega)});
    ShiftData<Rational> sa = shift_decompose(d.gen_a);
    ShiftData<Rational> sb = shift_decompose(d.gen_b);
    facts.push_back({"sigma = sqrt(3)/6", sa.sigma_squared == rat(1, 12) && sb.sigma_squared == rat(1, 12),
                     "sigma^2 = " + str(sa.sigma_squared)});
    Vec3<Rational> n = cross(sa.axis_direction, sb.axis_direction);
    Vec3<Rational> gap = sub(*sb.axis_point, *sa.axis_point);
    Rational k = dot(gap, n);
    Rational delta2 = k * k / dot(n, n);
    facts.push_back({"delta = sqrt(2)/12", delta2 == rat(1, 72), "delta^2 = " + str(delta2)});
    auto [fa, fb] = i213_from_affine_rep();
    double err = std::max(max_abs_diff(affine_matrix4(fa), to_double(affine_matrix4(d.gen_a))),
                          max_abs_diff(affine_matrix4(fb), to_double(affine_matrix4(d.gen_b))));
    facts.push_back({"generators = affine_rep(1/2) under the stored similarity", err <= 1e-12,
                     "max deviation " + str(err) + " (floating point, the rotation is irrational)"});
    return facts;
  }
  throw DomainError("unknown crystal group: " + name + " (expected P61, I213 or P4132)");
}

}  // namespace trefoil
