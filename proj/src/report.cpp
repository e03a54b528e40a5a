#include "trefoil/report.hpp"

#include <limits>

namespace trefoil {

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

Rational rational_from_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [p, q]");
  BigInt q = bigint_from_json(j[1]);
  if (q == 0) throw ParseError("zero denominator");
  return Rational(bigint_from_json(j[0]), q);
}

json to_json(const GeometricInvariants& g) {
  json j = {{"case", to_string(g.tag)}};
  auto put = [&](const char* k, const std::optional<double>& v) {
    if (v) j[k] = *v;
  };
  put("alpha", g.alpha);
  put("partial", g.partial);
  put("omega", g.omega);
  put("d", g.d);
  put("delta", g.delta_axis);
  put("sigma", g.sigma);
  return j;
}

json to_json(const LorentzFrame& f) {
  return {{"lambda", f.lambda},
          {"x_minus", to_json(f.x_minus)},
          {"x_plus", to_json(f.x_plus)},
          {"x_zero", to_json(f.x_zero)}};
}

json to_json(const PropernessVerdict& v) {
  json w = json::array();
  for (const auto* wit : {&v.witness_positive, &v.witness_negative})
    if (*wit) w.push_back(json::array({(*wit)->word.to_string(), (*wit)->alpha}));
  json j = {{"verdict", v.verdict}, {"reason", v.reason}, {"witnesses", w}};
  if (!v.named.empty()) {
    json named = json::array();
    for (const auto& n : v.named) named.push_back(json::array({n.word.to_string(), n.alpha}));
    j["alpha"] = named;
  }
  if (v.words_searched) {
    j["search"] = {{"hyperbolic_words", v.words_searched}, {"min_alpha", *v.min_alpha}, {"max_alpha", *v.max_alpha}};
  }
  if (v.fixed_line) j["fixed_line"] = {{"point", to_json(v.fixed_line->point)}, {"direction", to_json(v.fixed_line->direction)}};
  return j;
}

json to_json(const std::vector<Fact>& facts) {
  json arr = json::array();
  for (const auto& f : facts) arr.push_back({{"fact", f.name}, {"passed", f.passed}, {"detail", f.detail}});
  return arr;
}

json envelope(const std::string& command, json inputs, json results, double tolerance, const std::string& backend) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"tolerance", tolerance},
          {"backend", backend}};
}

}  // namespace trefoil
