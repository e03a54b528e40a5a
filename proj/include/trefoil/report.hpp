#pragma once

// JSON encoding of scalars, quaternions, affine isometries and matrices.
// Exact scalars: {"rat":[p,q]} for Q and {"rat":[p,q],"surd":{"c":[p,q],"d":d}} for Q[sqrt(d)].

#include <json.hpp>

#include <string>

#include "trefoil/affine.hpp"
#include "trefoil/crystal.hpp"
#include "trefoil/lorentz.hpp"
#include "trefoil/reps.hpp"

namespace trefoil {

using json = nlohmann::json;

json bigint_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

inline json rational_pair(const Rational& r) {
  return json::array({bigint_json(boost::multiprecision::numerator(r)), bigint_json(boost::multiprecision::denominator(r))});
}

Rational rational_from_pair(const json& j);

inline json scalar_json(double v) { return v; }
inline json scalar_json(const Complex& v) { return {{"re", v.real()}, {"im", v.imag()}}; }
inline json scalar_json(const Rational& v) { return {{"rat", rational_pair(v)}}; }
template <int D>
json scalar_json(const Surd<D>& v) {
  return {{"rat", rational_pair(v.rational_part())}, {"surd", {{"c", rational_pair(v.surd_coeff())}, {"d", D}}}};
}

template <class T>
T scalar_from_json(const json& j) {
  if constexpr (std::is_same_v<T, double>) {
    return j.get<double>();
  } else if constexpr (std::is_same_v<T, Complex>) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
  } else if constexpr (std::is_same_v<T, Rational>) {
    return rational_from_pair(j.at("rat"));
  } else {
    static_assert(is_surd<T>::value);
    Rational a = rational_from_pair(j.at("rat"));
    Rational b = 0;
    if (j.contains("surd")) {
      if (j.at("surd").at("d").get<int>() != T::radicand()) throw ParseError("surd radicand mismatch");
      b = rational_from_pair(j.at("surd").at("c"));
    }
    return T(a, b);
  }
}

template <class T>
const char* backend_name() {
  return is_exact_v<T> ? "exact" : "float64";
}

template <class T, std::size_t R, std::size_t C>
json to_json(const Mat<T, R, C>& m) {
  json rows = json::array();
  for (const auto& r : m.a) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalar_json(v));
    rows.push_back(row);
  }
  return rows;
}

template <class T, std::size_t R, std::size_t C>
Mat<T, R, C> matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != R) throw ParseError("matrix has the wrong number of rows");
  Mat<T, R, C> m;
  for (std::size_t i = 0; i < R; ++i) {
    if (!j[i].is_array() || j[i].size() != C) throw ParseError("matrix row has the wrong length");
    for (std::size_t k = 0; k < C; ++k) m.a[i][k] = scalar_from_json<T>(j[i][k]);
  }
  return m;
}

template <class T>
json to_json(const Vec3<T>& v) {
  return json::array({scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2])});
}

template <class T>
json to_json(const Quaternion<T>& q) {
  return {{"w", scalar_json(q.w())},
          {"i", scalar_json(q.bi())},
          {"j", scalar_json(q.cj())},
          {"ij", scalar_json(q.dij())},
          {"mu", scalar_json(q.params().mu)},
          {"nu", scalar_json(q.params().nu)}};
}

template <class T>
Quaternion<T> quaternion_from_json(const json& j) {
  AlgebraParams<T> p{scalar_from_json<T>(j.at("mu")), scalar_from_json<T>(j.at("nu")),
                     is_complex_v<T> ? FieldTag::complex : FieldTag::real};
  return Quaternion<T>(scalar_from_json<T>(j.at("w")), scalar_from_json<T>(j.at("i")), scalar_from_json<T>(j.at("j")),
                       scalar_from_json<T>(j.at("ij")), p);
}

template <class T>
json to_json(const AffineIsometry<T>& e) {
  return {{"v", to_json(e.v.coords())}, {"A", to_json(e.A)}};
}

template <class T>
AffineIsometry<T> affine_from_json(const json& j) {
  const json& v = j.at("v");
  return {PureVector<T>::from_coords(scalar_from_json<T>(v.at(0)), scalar_from_json<T>(v.at(1)),
                                     scalar_from_json<T>(v.at(2))),
          quaternion_from_json<T>(j.at("A"))};
}

template <class T>
json to_json(const ElementClass<T>& c) {
  json j = {{"type", to_string(c.kind)}, {"shift", to_json(c.shift)}};
  if (c.kind == ElementKind::rotation || c.kind == ElementKind::screw) {
    j["cos_angle"] = scalar_json(c.cos_angle);
    j["angle"] = std::acos(std::clamp(to_double(c.cos_angle), -1.0, 1.0));
    j["direction"] = to_json(c.direction);
    if (c.axis_point) j["axis_point"] = to_json(*c.axis_point);
  }
  return j;
}

json to_json(const GeometricInvariants& g);
json to_json(const LorentzFrame& f);
json to_json(const PropernessVerdict& v);
json to_json(const std::vector<Fact>& facts);

/// {"command","inputs","results","tolerance","backend"}
json envelope(const std::string& command, json inputs, json results, double tolerance, const std::string& backend);

/// Serialization used for reports; parse + dump reproduces it byte for byte.
inline std::string dump(const json& j) { return j.dump(2); }

}  // namespace trefoil
