#include <doctest.h>

#include <cmath>

#include "trefoil/reps.hpp"

using namespace trefoil;

namespace {
const double kR3 = std::sqrt(3.0);
const double kPi = std::acos(-1.0);
}  // namespace

TEST_CASE("case regions") {
  CHECK(classify(0.5) == CaseTag::Case1_spherical);
  CHECK(classify(-0.5) == CaseTag::Case1_spherical);
  CHECK(classify(kR3 / 2) == CaseTag::Case2_boundary);
  CHECK(classify(-kR3 / 2) == CaseTag::Case2_boundary);
  CHECK(classify(0.9) == CaseTag::Case3_elliptic_lorentz);
  CHECK(classify(1.0) == CaseTag::Case4_parabolic);
  CHECK(classify(-1.0) == CaseTag::Case4_parabolic);
  CHECK(classify(2.0) == CaseTag::Case5_hyperbolic);
  CHECK(std::string(to_string(CaseTag::Case1_spherical)) == "Case1_spherical");
  CHECK(case_number(CaseTag::Case5_hyperbolic) == 5);
}

TEST_CASE("generators are unit, conjugate and satisfy the braid relation") {
  for (double x : {-0.8, -0.3, 0.1, 0.5, 0.88, 0.95, -0.97, 1.0, -1.0, 1.3, 2.0, -4.0}) {
    auto [a, b] = real_linear_rep(x);
    CHECK(a.norm() == doctest::Approx(1.0));
    CHECK(b.norm() == doctest::Approx(1.0));
    CHECK(a.w() == doctest::Approx(x));
    CHECK(b.w() == doctest::Approx(x));
    CHECK(max_abs_diff(a * b * a, b * a * b) < 1e-12);
    double y = -(as_quaternion(a.pure(), a.params()) * as_quaternion(b.pure(), b.params())).w();
    CHECK(y == doctest::Approx(y_of(x)));
  }
}

TEST_CASE("affine deformation") {
  for (double x : {-0.8, 0.5, 0.95, 1.0, 2.0}) {
    auto [ra, rb] = affine_rep(x);
    CHECK(max_abs_diff(ra * rb * ra, rb * ra * rb) < 1e-10);
    CHECK(4 * x * x + 4 * s_of(x) * x - 3 == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(affine_rep(0.0), NoAffineDeformation);
  CHECK_THROWS_AS(RepPoint::make(0.0, true), NoAffineDeformation);
  CHECK_NOTHROW(RepPoint::make(0.0, false));
  CHECK_THROWS_AS(affine_rep(kR3 / 2), TrivialDeformation);
  CHECK_THROWS_AS(real_linear_rep(kR3 / 2), Unsupported);
}

TEST_CASE("exact parabolic pair") {
  for (int sign : {1, -1}) {
    auto [a, b] = case4_affine_rep(sign);
    CHECK(a * b * a == b * a * b);
    CHECK(a.A.norm() == 1);
    CHECK(b.A.norm() == 1);
  }
}

TEST_CASE("complex boundary pair") {
  for (int sign : {1, -1}) {
    auto [a, b] = case2_linear_rep(sign);
    CHECK(max_abs_diff(a * b * a, b * a * b) < 1e-14);
    CHECK(std::abs(a.norm() - Complex(1, 0)) < 1e-14);
  }
  auto [pa, pb] = case2_plane_action();
  CHECK(std::abs(std::abs(pa.angle()) - kPi / 3) < 1e-12);
  PlaneMap aba = pa * pb * pa, bab = pb * pa * pb;
  CHECK(std::abs(aba.rot - bab.rot) < 1e-12);
  CHECK(std::abs(aba.trans - bab.trans) < 1e-12);
  auto fp = (pb * pa).fixed_point();
  REQUIRE(fp);
  Complex bary = (Complex(0, 0) + Complex(0, 1) + std::polar(1.0, kPi / 6)) / 3.0;
  CHECK(std::abs(*fp - bary) < 1e-12);
  CHECK(std::abs(std::abs((pb * pa).angle()) - 2 * kPi / 3) < 1e-12);
}

TEST_CASE("invariants at x = 1/2") {
  GeometricInvariants g = geometric_invariants(0.5);
  CHECK(*g.alpha == doctest::Approx(2 * kPi / 3));
  CHECK(std::cos(*g.omega) == doctest::Approx(-1.0 / 3));
  CHECK(*g.sigma == doctest::Approx(kR3 / 2));
  CHECK(*g.delta_axis == doctest::Approx(std::sqrt(2.0) / 4));
}

TEST_CASE("cone trigonometry") {
  for (double x : {0.2, 0.6, 0.9, 0.99, 1.5, 3.0}) {
    TrigCheck t = cone_trig_check(x);
    CHECK(t.lhs == doctest::Approx(t.rhs).epsilon(1e-10));
  }
  CHECK_THROWS_AS(cone_trig_check(1.0), Unsupported);
}

TEST_CASE("C = D^2 is central and acts trivially") {
  for (double x : {0.5, 0.3, 0.9, 1.5}) {
    auto [ra, rb] = affine_rep(x);
    auto e = element_images(ra, rb);
    CHECK(max_abs_diff(affine_matrix4(e.C), Mat4<double>::identity()) < 1e-10);
    CHECK(std::abs(std::abs(e.C.A.w()) - 1) < 1e-12);
    CHECK(max_abs_diff(e.C * ra, ra * e.C) < 1e-10);
    CHECK(max_abs_diff(e.F * e.F * e.F, e.C) < 1e-10);
  }
  auto [a, b] = case2_linear_rep(1);
  auto e = element_images(a, b);
  CHECK(max_abs_diff(e.F * e.F * e.F, e.C) < 1e-12);
}
