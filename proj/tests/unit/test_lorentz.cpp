#include <doctest.h>

#include <cmath>

#include "trefoil/crystal.hpp"
#include "trefoil/lorentz.hpp"
#include "trefoil/words.hpp"

using namespace trefoil;

namespace {

AffineIsometry<double> image(double x, const char* w) {
  auto [ra, rb] = affine_rep(x);
  return evaluate(GroupWord::parse(w), ra, rb);
}

}  // namespace

TEST_CASE("Lorentz classes") {
  auto [a3, b3] = real_linear_rep(0.9);
  CHECK(classify_lorentz(a3) == LorentzClass::elliptic);
  auto [a4, b4] = real_linear_rep(1.0);
  CHECK(classify_lorentz(a4) == LorentzClass::parabolic);
  auto [a5, b5] = real_linear_rep(2.0);
  CHECK(classify_lorentz(a5) == LorentzClass::hyperbolic);
  CHECK(classify_lorentz(Quaternion<double>::one(split<double>())) == LorentzClass::identity);
}

TEST_CASE("eigen frame of a^2 at x = 2") {
  auto g = image(2, "a^2");
  LorentzFrame f = eigen_frame(g.A);
  CHECK(f.lambda == doctest::Approx(97 - std::sqrt(9408.0)));
  CHECK(minkowski(f.x_zero, f.x_zero) == doctest::Approx(-1.0));
  CHECK(minkowski(f.x_minus, f.x_minus) == doctest::Approx(0.0));
  CHECK(minkowski(f.x_plus, f.x_plus) == doctest::Approx(0.0));
  Mat3<double> m = so3_matrix(g.A);
  Vec3<double> mm = m * f.x_minus, mp = m * f.x_plus;
  for (int k = 0; k < 3; ++k) {
    CHECK(mm[k] == doctest::Approx(f.lambda * f.x_minus[k]));
    CHECK(mp[k] == doctest::Approx(f.x_plus[k] / f.lambda));
  }
  LorentzFrame fm = eigen_frame(m);
  for (int k = 0; k < 3; ++k) CHECK(fm.x_zero[k] == doctest::Approx(f.x_zero[k]));
}

TEST_CASE("Margulis invariant properties") {
  for (double x : {1.2, 2.0, 3.5}) {
    auto [ra, rb] = affine_rep(x);
    auto g = ra * ra;
    double al = margulis_alpha(g);
    CHECK(margulis_alpha(g.inverse()) == doctest::Approx(al));
    CHECK(margulis_alpha(g * g) == doctest::Approx(2 * al));
    for (const auto& h : {rb, ra * rb, rb.inverse()})
      CHECK(margulis_alpha(h * g * h.inverse()) == doctest::Approx(al).epsilon(1e-8));
    CHECK(margulis_alpha(g, {3, -1, 7}) == doctest::Approx(al));
  }
  CHECK(margulis_alpha(image(2, "a^2")) == doctest::Approx(13 * std::sqrt(3.0) / 4).epsilon(1e-12));
  CHECK_THROWS_AS(margulis_alpha(image(0.9, "a^2")), NotHyperbolic);
}

TEST_CASE("closed form for alpha(a^2)") {
  for (double x = 1.1; x < 10; x += 0.7) CHECK(alpha_g2_closed_form(x) == doctest::Approx(margulis_alpha(image(x, "a^2"))));
  CHECK(alpha_g2_closed_form(std::sqrt(3.0) / 2) == 0);
  CHECK_THROWS_AS(alpha_g2_closed_form(0.5), DomainError);
}

TEST_CASE("alpha(a^2 b^2) equals alpha(a^2)") {
  for (double x : {1.05, 2.0, 3.0, 7.0})
    CHECK(margulis_alpha(image(x, "a^2 b^2")) == doctest::Approx(margulis_alpha(image(x, "a^2"))).epsilon(1e-9));
}

TEST_CASE("parabolic fixed line") {
  auto [a, b] = case4_affine_rep(1);
  auto line = parabolic_fixed_line(a);
  REQUIRE(line);
  CHECK(line->point == Vec3<Rational>{rat(1, 8), 0, 0});
  CHECK(a.act(line->point) == line->point);
  Vec3<Rational> far{line->point[0] + 5 * line->direction[0], line->point[1] + 5 * line->direction[1],
                     line->point[2] + 5 * line->direction[2]};
  CHECK(a.act(far) == far);
}

TEST_CASE("properness verdicts") {
  CHECK(properness_verdict(1.0).verdict == "not_proper");
  CHECK(properness_verdict(-1.0).verdict == "not_proper");
  auto m = properness_verdict(std::cos(std::acos(-1.0) / 7));
  CHECK(m.verdict == "not_proper");
  CHECK(properness_verdict(0.5).verdict == "inconclusive");
  auto h = properness_verdict(2.0, kDefaultTol, 4);
  CHECK(h.words_searched > 0);
  CHECK(*h.min_alpha > 0);
  CHECK(h.named.size() == 2);
  CHECK(cos_pi_over_n(std::cos(std::acos(-1.0) / 9)) == 9);
  CHECK_FALSE(cos_pi_over_n(0.3));
}
