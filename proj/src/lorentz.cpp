#include "trefoil/lorentz.hpp"

#include <cmath>
#include <functional>

namespace trefoil {

namespace {

Vec3<double> cross(const Vec3<double>& a, const Vec3<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double euclid(const Vec3<double>& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

double det_columns(const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c) {
  Vec3<double> bc = cross(b, c);
  return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

void require_hyperbolic_trace(double tr, double tol) {
  double t = tr - 1;  // lambda + 1/lambda
  if (!(t > 2 + tol)) throw NotHyperbolic("linear part is not hyperbolic (trace " + std::to_string(tr) + ")");
}

/// Null eigenvectors in the plane Q-orthogonal to the spacelike fixed vector n.
LorentzFrame frame_from_axis(Vec3<double> n, const Mat3<double>& g, double tol) {
  double qn = minkowski(n, n);
  if (!(qn < -tol * euclid(n) * euclid(n))) throw NotHyperbolic("fixed direction is not spacelike");
  // v = (v0, v1, 1) with v0 n0 + v1 n1 = n2 and v0^2 + v1^2 = 1
  double r2 = n[0] * n[0] + n[1] * n[1];
  double r = std::sqrt(r2);
  double c = n[2] / r;
  double t = std::sqrt(std::max(0.0, 1 - c * c));
  Vec3<double> foot{c * n[0] / r, c * n[1] / r, 1};
  Vec3<double> perp{-n[1] / r, n[0] / r, 0};
  Vec3<double> v1{foot[0] + t * perp[0], foot[1] + t * perp[1], 1};
  Vec3<double> v2{foot[0] - t * perp[0], foot[1] - t * perp[1], 1};
  double l1 = (g * v1)[2];
  double l2 = (g * v2)[2];
  // the contracting eigenvalue is recovered from the expanding one, which is well conditioned
  double big = std::max(l1, l2);
  if (!(big > 1 + tol)) throw NotHyperbolic("eigenvalues are not positive and distinct");
  LorentzFrame f;
  f.lambda = 1 / big;
  if (l1 < l2) {
    f.x_minus = v1;
    f.x_plus = v2;
  } else {
    f.x_minus = v2;
    f.x_plus = v1;
  }
  double s = 1 / std::sqrt(-qn);
  f.x_zero = {s * n[0], s * n[1], s * n[2]};
  if (det_columns(f.x_minus, f.x_plus, f.x_zero) < 0) f.x_zero = {-f.x_zero[0], -f.x_zero[1], -f.x_zero[2]};
  return f;
}

}  // namespace

const char* to_string(LorentzClass c) {
  switch (c) {
    case LorentzClass::identity: return "identity";
    case LorentzClass::elliptic: return "elliptic";
    case LorentzClass::parabolic: return "parabolic";
    case LorentzClass::hyperbolic: return "hyperbolic";
  }
  return "?";
}

double minkowski(const Vec3<double>& a, const Vec3<double>& b) { return -a[0] * b[0] - a[1] * b[1] + a[2] * b[2]; }

LorentzFrame eigen_frame(const Mat3<double>& g, double tol) {
  require_hyperbolic_trace(trace3(g), tol);
  Mat3<double> h = g - Mat3<double>::identity();
  Vec3<double> rows[3] = {{h.a[0][0], h.a[0][1], h.a[0][2]},
                          {h.a[1][0], h.a[1][1], h.a[1][2]},
                          {h.a[2][0], h.a[2][1], h.a[2][2]}};
  Vec3<double> best{};
  double best_norm = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec3<double> c = cross(rows[i], rows[j]);
      double nc = euclid(c);
      if (nc > best_norm) {
        best_norm = nc;
        best = c;
      }
    }
  return frame_from_axis(best, g, tol);
}

LorentzFrame eigen_frame(const Quaternion<double>& a, double tol) {
  if (classify_lorentz(a, tol) != LorentzClass::hyperbolic)
    throw NotHyperbolic(std::string("linear part is ") + to_string(classify_lorentz(a, tol)));
  Mat3<double> g = so3_matrix(a, 1e-6 * std::max(1.0, a.w() * a.w()));
  require_hyperbolic_trace(trace3(g), tol);
  return frame_from_axis(a.pure().coords(), g, tol);
}

double margulis_alpha(const AffineIsometry<double>& phi, const Vec3<double>& probe, double tol) {
  LorentzFrame f = eigen_frame(phi.A, tol);
  Vec3<double> img = phi.act(probe);
  Vec3<double> d{img[0] - probe[0], img[1] - probe[1], img[2] - probe[2]};
  return minkowski(f.x_zero, d);
}

double alpha_g2_closed_form(double x, double tol) {
  if (std::abs(3 - 4 * x * x) <= tol) return 0;
  if (x < 1 - tol) throw DomainError("alpha(g2) closed form needs x >= 1");
  if (x < 1) return 0;
  return -(3 - 4 * x * x) * std::sqrt(x * x - 1) / (2 * x);
}

double alpha_g3_closed_form(double x) {
  if (!(x > 1)) throw DomainError("alpha(g3) closed form needs x > 1");
  double x2 = x * x;
  double r = std::sqrt(x2 - 1);
  double inner = 9 + 4 * x2 * (-21 + 63 * x2 - 76 * x2 * x2 + 32 * x2 * x2 * x2);
  double num = 3 + x2 * (-1 - 22 * x2 + 36 * x2 * x2 - 16 * x2 * x2 * x2 - 8 * x * r * inner);
  return num / (8 * x * std::pow(r, 5));
}

std::optional<int> cos_pi_over_n(double x, double tol) {
  if (!(x > 0 && x < 1)) return std::nullopt;
  const double pi = std::acos(-1.0);
  long n = std::lround(pi / std::acos(x));
  if (n < 3 || n > 1000000) return std::nullopt;
  if (std::abs(std::cos(pi / double(n)) - x) > tol) return std::nullopt;
  return static_cast<int>(n);
}

PropernessVerdict properness_verdict(double x, double tol, std::size_t search_length) {
  PropernessVerdict out;
  out.verdict = "inconclusive";
  CaseTag tag = classify(x, tol);

  if (tag == CaseTag::Case4_parabolic) {
    auto [ra, rb] = case4_affine_rep(x < 0 ? -1 : 1);
    auto line = parabolic_fixed_line(ra);
    if (line) {
      Line<double> l;
      for (int i = 0; i < 3; ++i) {
        l.point[i] = to_double(line->point[i]);
        l.direction[i] = to_double(line->direction[i]);
      }
      out.fixed_line = l;
      out.verdict = "not_proper";
      out.reason = "fixed line: rho(a) is a parabolic element of infinite order fixing a line pointwise";
    } else {
      out.reason = "rho(a) has no fixed line";
    }
    return out;
  }

  if (tag == CaseTag::Case5_hyperbolic) {
    auto [ra, rb] = affine_rep(x, tol);
    auto thresh = [](const AffineIsometry<double>& g) { return 1e-6 * (1 + euclid(g.v.coords())); };
    for (const char* w : {"a^2", "a^2 b^2"}) {
      GroupWord gw = GroupWord::parse(w);
      out.named.push_back({gw, margulis_alpha(evaluate(gw, ra, rb), {0, 0, 0}, tol)});
    }
    AffineIsometry<double> gens[4] = {ra, ra.inverse(), rb, rb.inverse()};
    const char letters[4] = {'a', 'A', 'b', 'B'};
    std::string word;
    std::function<void(const AffineIsometry<double>&, int)> walk = [&](const AffineIsometry<double>& g, int last) {
      if (!word.empty() && std::abs(g.A.w()) > 1 + 1e-9) {
        double al = margulis_alpha(g, {0, 0, 0}, tol);
        ++out.words_searched;
        if (!out.min_alpha || al < *out.min_alpha) out.min_alpha = al;
        if (!out.max_alpha || al > *out.max_alpha) out.max_alpha = al;
        double th = thresh(g);
        if (al > th && (!out.witness_positive || word.size() < out.witness_positive->word.length()))
          out.witness_positive = Witness{GroupWord(word), al};
        if (al < -th && (!out.witness_negative || word.size() < out.witness_negative->word.length()))
          out.witness_negative = Witness{GroupWord(word), al};
      }
      if (word.size() >= search_length) return;
      for (int k = 0; k < 4; ++k) {
        if (last >= 0 && letters[k] == inverse_letter(letters[last])) continue;
        word.push_back(letters[k]);
        walk(g * gens[k], k);
        word.pop_back();
      }
    };
    walk(AffineIsometry<double>::identity(ra.params()), -1);
    // prefer the named witnesses when they qualify
    for (const auto& w : out.named) {
      AffineIsometry<double> g = evaluate(w.word, ra, rb);
      if (w.alpha > thresh(g)) out.witness_positive = w;
      if (w.alpha < -thresh(g)) out.witness_negative = w;
    }
    if (out.witness_positive && out.witness_negative) {
      out.verdict = "not_proper";
      out.reason = "Margulis: opposite-sign invariants";
    } else {
      out.reason = "Margulis: no opposite-sign pair among " + std::to_string(out.words_searched) +
                   " hyperbolic words of length <= " + std::to_string(search_length);
    }
    return out;
  }

  if (auto n = cos_pi_over_n(x, tol); n && *n >= 7) {
    out.verdict = "not_proper";
    out.reason = "Mess (cocompact linear quotient)";
    return out;
  }
  out.reason = "no applicable criterion";
  return out;
}

}  // namespace trefoil
