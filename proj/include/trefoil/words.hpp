#pragma once

// Words in the free group on {a, b} and Fox free differential calculus.
//
// Grammar: letters a, b and their inverses A, B, each optionally followed by
// ^n with n a (possibly negative) integer. Whitespace, '*' and '.' are
// separators; "1" or the empty string is the trivial word.
//   "a^-4 b a a b"  ==  "AAAAbaab"

#include <map>
#include <string>
#include <vector>

#include "trefoil/affine.hpp"

namespace trefoil {

class GroupWord {
 public:
  GroupWord() = default;
  /// Letters in {a, A, b, B}; freely reduced on construction.
  explicit GroupWord(std::string letters);

  static GroupWord parse(const std::string& text);
  static GroupWord generator(char g) { return GroupWord(std::string(1, g)); }

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord pow(int n) const;
  /// Exponent-run form, e.g. "a^-4 b a^2 b"; "1" for the empty word.
  std::string to_string() const;

  friend GroupWord operator*(const GroupWord& l, const GroupWord& r) { return GroupWord(l.letters_ + r.letters_); }
  friend bool operator==(const GroupWord& l, const GroupWord& r) { return l.letters_ == r.letters_; }
  friend bool operator!=(const GroupWord& l, const GroupWord& r) { return !(l == r); }
  friend bool operator<(const GroupWord& l, const GroupWord& r) {
    return l.letters_.size() != r.letters_.size() ? l.letters_.size() < r.letters_.size() : l.letters_ < r.letters_;
  }

 private:
  std::string letters_;
};

inline char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw ParseError(std::string("not a generator letter: ") + c);
}

/// Cancel adjacent g g^-1 pairs until none remain.
std::string free_reduce(const std::string& letters);
inline GroupWord free_reduce(const GroupWord& w) { return w; }

/// Finite integer combination of reduced words (an element of Z[F_2]).
class FoxPolynomial {
 public:
  void add(const GroupWord& w, long long c);
  const std::map<GroupWord, long long>& terms() const& { return terms_; }
  std::map<GroupWord, long long> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  friend FoxPolynomial operator+(FoxPolynomial l, const FoxPolynomial& r) {
    for (const auto& [w, c] : r.terms_) l.add(w, c);
    return l;
  }
  /// Left multiplication by a group element.
  friend FoxPolynomial operator*(const GroupWord& u, const FoxPolynomial& p) {
    FoxPolynomial r;
    for (const auto& [w, c] : p.terms_) r.add(u * w, c);
    return r;
  }
  friend bool operator==(const FoxPolynomial& l, const FoxPolynomial& r) { return l.terms_ == r.terms_; }

 private:
  std::map<GroupWord, long long> terms_;
};

/// dw/dg for g in {'a', 'b'}.
FoxPolynomial fox_derivative(const GroupWord& w, char g);

/// The trefoil relator aba (bab)^-1.
GroupWord trefoil_relator();

/// Image of w under a -> ga, b -> gb, in any group with operator*, inverse().
template <class G>
G evaluate(const GroupWord& w, const G& ga, const G& gb, const G& one) {
  G ai = ga.inverse();
  G bi = gb.inverse();
  G r = one;
  for (char c : w.letters()) {
    switch (c) {
      case 'a': r = r * ga; break;
      case 'A': r = r * ai; break;
      case 'b': r = r * gb; break;
      case 'B': r = r * bi; break;
    }
  }
  return r;
}

template <class T>
Quaternion<T> evaluate(const GroupWord& w, const Quaternion<T>& a, const Quaternion<T>& b) {
  return evaluate(w, a, b, Quaternion<T>::one(a.params()));
}

template <class T>
AffineIsometry<T> evaluate(const GroupWord& w, const AffineIsometry<T>& a, const AffineIsometry<T>& b) {
  return evaluate(w, a, b, AffineIsometry<T>::identity(a.params()));
}

/// sum over g of (dw/dg evaluated on the linear parts) applied to the translation of g.
/// Equals the translational part of the composed word for any affine pair.
template <class T>
PureVector<T> fox_translation(const GroupWord& w, const AffineIsometry<T>& ra, const AffineIsometry<T>& rb) {
  PureVector<T> total;
  for (auto [g, vg] : {std::pair{'a', ra.v}, std::pair{'b', rb.v}}) {
    FoxPolynomial d = fox_derivative(w, g);
    for (const auto& [u, c] : d.terms()) {
      PureVector<T> img = conjugation_raw(evaluate(u, ra.A, rb.A), vg);
      total = total + T(static_cast<long long>(c)) * img;
    }
  }
  return total;
}

/// Fox translation of w, valid only when w(A, B) = 1 on the linear parts.
template <class T>
PureVector<T> translational_residual(const GroupWord& w, const AffineIsometry<T>& ra, const AffineIsometry<T>& rb,
                                     double tol = kDefaultTol) {
  Quaternion<T> lin = evaluate(w, ra.A, rb.A);
  double off = max_abs_diff(lin, Quaternion<T>::one(lin.params()));
  if (off > tol) throw OffVariety("w(A,B) differs from 1 by " + std::to_string(off));
  return fox_translation(w, ra, rb);
}

/// 2x^2 - 2y - 1
template <class T>
T trefoil_char_poly(const T& x, const T& y) {
  return T(2) * x * x - T(2) * y - T(1);
}

/// 4x^2 + 4sx - 3
template <class T>
T trefoil_affine_poly(const T& x, const T& s) {
  return T(4) * x * x + T(4) * s * x - T(3);
}

}  // namespace trefoil
