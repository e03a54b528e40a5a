#include "trefoil/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "trefoil/crystal.hpp"
#include "trefoil/lorentz.hpp"
#include "trefoil/report.hpp"
#include "trefoil/reps.hpp"
#include "trefoil/words.hpp"

namespace trefoil {

namespace {

const char* kWordHelp =
    "Words use the letters a, b and their inverses A, B, each with an optional ^n exponent, "
    "e.g. \"a^-4 b a a b\" or \"AAAAbaab\".";

ParsedX parse_x_impl(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  ParsedX p;
  p.text = raw;
  std::smatch m;
  static const std::regex frac(R"(^([+-]?\d+)/(\d+)$)");
  static const std::regex integer(R"(^[+-]?\d+$)");
  static const std::regex root(R"(^([+-]?)sqrt\((\d+)\)(?:/(\d+))?$)");
  static const std::regex cospi(R"(^cos\(pi/(\d+)\)$)");
  if (std::regex_match(t, m, frac)) {
    if (BigInt(m[2].str()) == 0) throw ParseError("zero denominator in " + raw);
    p.exact = Rational(BigInt(m[1].str()), BigInt(m[2].str()));
    p.value = to_double(*p.exact);
  } else if (std::regex_match(t, integer)) {
    p.exact = Rational(BigInt(t));
    p.value = to_double(*p.exact);
  } else if (std::regex_match(t, m, root)) {
    double n = std::stod(m[2].str());
    double d = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (d == 0) throw ParseError("zero denominator in " + raw);
    p.value = (m[1].str() == "-" ? -1 : 1) * std::sqrt(n) / d;
    double r = std::round(std::sqrt(n));
    if (r * r == n) p.exact = Rational(static_cast<long long>(m[1].str() == "-" ? -r : r), static_cast<long long>(d));
  } else if (std::regex_match(t, m, cospi)) {
    double n = std::stod(m[1].str());
    if (n == 0) throw ParseError("cos(pi/0) is undefined");
    p.value = std::cos(std::acos(-1.0) / n);
  } else {
    std::size_t used = 0;
    try {
      p.value = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() || !std::isfinite(p.value)) throw ParseError("cannot parse x value: " + raw);
  }
  return p;
}

bool is_exact_scalar(const json& j) { return j.is_object() && j.contains("rat"); }

std::string rational_text(const json& pair) {
  std::string p = pair[0].is_string() ? pair[0].get<std::string>() : std::to_string(pair[0].get<long long>());
  std::string q = pair[1].is_string() ? pair[1].get<std::string>() : std::to_string(pair[1].get<long long>());
  return q == "1" ? p : p + "/" + q;
}

std::string scalar_text(const json& j) {
  if (is_exact_scalar(j)) {
    std::string s = rational_text(j["rat"]);
    if (j.contains("surd")) {
      std::string c = rational_text(j["surd"]["c"]);
      if (c != "0") {
        std::string root = "sqrt(" + std::to_string(j["surd"]["d"].get<int>()) + ")";
        s = (s == "0" ? "" : s + " + ") + (c == "1" ? root : c + "*" + root);
      }
    }
    return s;
  }
  if (j.is_object() && j.contains("re")) {
    std::ostringstream os;
    os << std::setprecision(12) << j["re"].get<double>() << (j["im"].get<double>() < 0 ? " - " : " + ")
       << std::abs(j["im"].get<double>()) << "i";
    return os.str();
  }
  if (j.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(12) << j.get<double>();
    return os.str();
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_leaf(const json& j) { return !j.is_structured() || is_exact_scalar(j) || (j.is_object() && j.contains("re")); }

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_leaf(e)) return false;
  return true;
}

void render(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto line = [&](const std::string& key, const json& v) {
    if (is_leaf(v)) {
      os << pad << key << ": " << scalar_text(v) << "\n";
    } else if (is_flat_array(v)) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "]\n";
    } else if (v.is_array() && !v.empty() && is_flat_array(v[0])) {
      os << pad << key << ":\n";
      for (const auto& row : v) {
        os << pad << "  [";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << scalar_text(row[i]);
        os << "]\n";
      }
    } else {
      os << pad << key << ":\n";
      render(os, v, indent + 2);
    }
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) line(it.key(), it.value());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) line("- " + std::to_string(i), j[i]);
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

std::string latex_scalar(const json& j) {
  if (is_exact_scalar(j)) {
    std::string s = rational_text(j["rat"]);
    auto slash = s.find('/');
    if (slash == std::string::npos) return s;
    std::string num = s.substr(0, slash);
    bool neg = num[0] == '-';
    return std::string(neg ? "-" : "") + "\\frac{" + (neg ? num.substr(1) : num) + "}{" + s.substr(slash + 1) + "}";
  }
  return scalar_text(j);
}

std::string latex_matrix(const json& m) {
  std::string s = "\\begin{pmatrix}\n";
  for (const auto& row : m) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " & " : "") + latex_scalar(row[i]);
    s += " \\\\\n";
  }
  return s + "\\end{pmatrix}";
}

void collect_latex(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_array() && !j.empty() && is_flat_array(j[0]) && j[0].size() == j.size()) {
    os << "% " << path << "\n" << latex_matrix(j) << "\n";
    return;
  }
  if (j.is_object() && !is_exact_scalar(j))
    for (auto it = j.begin(); it != j.end(); ++it) collect_latex(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
}

struct Output {
  bool as_json = false;
  bool latex = false;
  std::string out_file;
  double tol = kDefaultTol;
};

void add_output_flags(CLI::App* cmd, Output& o, bool latex = false) {
  cmd->add_flag("--json", o.as_json, "emit the JSON report");
  if (latex) cmd->add_flag("--latex", o.latex, "emit matrices as LaTeX");
  cmd->add_option("--tolerance", o.tol, "float-mode tolerance (exact mode ignores it)")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out_file, "also write the report to this file");
}

void emit(const json& report, const Output& o, std::ostream& out) {
  std::string text;
  if (o.as_json) {
    text = dump(report) + "\n";
  } else if (o.latex) {
    std::ostringstream os;
    collect_latex(report["results"], "", os);
    text = os.str();
  } else {
    std::ostringstream os;
    os << report["command"].get<std::string>() << " (" << report["backend"].get<std::string>() << ")\n";
    render(os, report["results"], 2);
    text = os.str();
  }
  out << text;
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw Error("cannot write " + o.out_file);
    f << (o.as_json || o.latex ? text : dump(report) + "\n");
  }
}

json x_inputs(const ParsedX& x) {
  json j = {{"x", x.text}, {"x_value", x.value}};
  if (x.exact) j["x_exact"] = scalar_json(*x.exact);
  return j;
}

template <class T>
json linear_block_json(const QPair<T>& p) {
  json j = {{"A", to_json(p.first)}, {"B", to_json(p.second)}};
  if constexpr (is_complex_v<T>) {
    j["matrix2_A"] = to_json(to_matrix2(p.first));
    j["matrix2_B"] = to_json(to_matrix2(p.second));
  } else {
    j["m_a"] = to_json(so3_matrix(p.first));
    j["m_b"] = to_json(so3_matrix(p.second));
  }
  return j;
}

template <class T>
json affine_block_json(const AffinePair<T>& p) {
  return {{"rho_a", to_json(p.first)},
          {"rho_b", to_json(p.second)},
          {"M_a", to_json(affine_matrix4(p.first))},
          {"M_b", to_json(affine_matrix4(p.second))}};
}

int cmd_classify(const ParsedX& x, const Output& o, std::ostream& out) {
  CaseTag c = classify(x.value, o.tol);
  emit(envelope("classify", x_inputs(x), {{"case", to_string(c)}, {"case_number", case_number(c)}}, o.tol, "float64"), o,
       out);
  return 0;
}

int cmd_rep(const ParsedX& x, bool affine, const Output& o, std::ostream& out) {
  CaseTag c = classify(x.value, o.tol);
  json res = {{"case", to_string(c)}, {"x", x.value}, {"y", y_of(x.value)}};
  std::string backend = "float64";
  bool exact4 = c == CaseTag::Case4_parabolic && x.exact && (*x.exact == 1 || *x.exact == -1);
  if (exact4) {
    backend = "exact";
    int sign = *x.exact < 0 ? -1 : 1;
    res["linear"] = linear_block_json(case4_linear_rep(sign));
    if (affine) {
      auto p = case4_affine_rep(sign);
      res["s"] = scalar_json((Rational(3) - Rational(4)) / Rational(4 * sign));
      res["affine"] = affine_block_json(p);
    }
  } else {
    LinearRep rep = linear_rep(x.value, o.tol);
    res["linear"] = rep.is_complex() ? linear_block_json(rep.complex()) : linear_block_json(rep.real());
    if (affine) {
      auto p = affine_rep(x.value, o.tol);
      res["s"] = s_of(p.first.A.w());
      res["affine"] = affine_block_json(p);
    }
  }
  emit(envelope("rep", x_inputs(x), res, o.tol, backend), o, out);
  return 0;
}

int cmd_invariants(const ParsedX& x, const Output& o, std::ostream& out) {
  double v = x.value;
  GeometricInvariants g = geometric_invariants(v, o.tol);
  json res = {{"derived", to_json(g)}};
  json closed;
  double u = 1 - v * v;
  if (g.tag == CaseTag::Case1_spherical) {
    closed["delta"] = std::sqrt(3 - 4 * v * v) / 4;
    closed["cos_omega"] = (2 * v * v - 1) / (2 - 2 * v * v);
    if (v != 0) closed["sigma"] = (3 / (4 * v) - v) * std::sqrt(u);
  }
  if (g.tag == CaseTag::Case3_elliptic_lorentz) closed["cosh_d"] = y_of(v) / u;
  if (g.tag == CaseTag::Case5_hyperbolic) closed["cosh_d"] = y_of(v) / -u;
  if (g.alpha) closed["cos_alpha_half"] = v;
  res["closed_form"] = closed;
  if (g.tag == CaseTag::Case1_spherical || g.tag == CaseTag::Case3_elliptic_lorentz ||
      g.tag == CaseTag::Case5_hyperbolic) {
    TrigCheck t = cone_trig_check(v, o.tol);
    res["cone_trig"] = {{"lhs", t.lhs}, {"rhs", t.rhs}, {"difference", t.difference}};
  }
  emit(envelope("invariants", x_inputs(x), res, o.tol, "float64"), o, out);
  return 0;
}

int cmd_fox(const std::string& word, const std::optional<ParsedX>& x, const Output& o, std::ostream& out) {
  GroupWord w = GroupWord::parse(word);
  json res = {{"word", w.to_string()},
              {"d/da", fox_derivative(w, 'a').to_string()},
              {"d/db", fox_derivative(w, 'b').to_string()}};
  json inputs = {{"word", word}};
  int code = 0;
  if (x) {
    inputs.update(x_inputs(*x));
    auto [ra, rb] = affine_rep(x->value, o.tol);
    Vec3<double> fox = fox_translation(w, ra, rb).coords();
    Vec3<double> direct = evaluate(w, ra, rb).v.coords();
    double diff = max_abs_diff(PureVector<double>::from_coords(fox), PureVector<double>::from_coords(direct));
    res["translation_fox"] = to_json(fox);
    res["translation_direct"] = to_json(direct);
    res["difference"] = diff;
    if (diff > o.tol * 10) code = 1;
  }
  emit(envelope("fox", inputs, res, o.tol, "float64"), o, out);
  return code;
}

int cmd_relation_check(const ParsedX& x, const std::string& word, const Output& o, std::ostream& out) {
  GroupWord w = word.empty() ? trefoil_relator() : GroupWord::parse(word);
  json inputs = x_inputs(x);
  inputs["word"] = w.to_string();
  json res;
  bool ok = true;
  LinearRep rep = linear_rep(x.value, o.tol);
  double lin = rep.is_complex()
                   ? max_abs_diff(evaluate(w, rep.complex().first, rep.complex().second),
                                  Quaternion<Complex>::one(rep.complex().first.params()))
                   : max_abs_diff(evaluate(w, rep.real().first, rep.real().second),
                                  Quaternion<double>::one(rep.real().first.params()));
  res["linear_residual"] = lin;
  ok = ok && lin <= o.tol;
  try {
    auto [ra, rb] = affine_rep(x.value, o.tol);
    PureVector<double> t = translational_residual(w, ra, rb, o.tol);
    double aff = max_abs_diff(evaluate(w, ra, rb), AffineIsometry<double>::identity(ra.params()));
    res["affine_residual"] = aff;
    res["translational_residual"] = to_json(t.coords());
    ok = ok && aff <= o.tol * 10 && t.is_zero(o.tol * 10);
  } catch (const NoAffineDeformation& e) {
    res["affine"] = e.what();
  } catch (const TrivialDeformation& e) {
    res["affine"] = e.what();
  } catch (const OffVariety& e) {
    res["affine"] = e.what();
    ok = false;
  }
  res["status"] = ok ? "pass" : "fail";
  emit(envelope("relation-check", inputs, res, o.tol, "float64"), o, out);
  return ok ? 0 : 1;
}

int cmd_margulis(const ParsedX& x, const std::string& word, const Output& o, std::ostream& out) {
  GroupWord w = GroupWord::parse(word.empty() ? "a^2" : word);
  auto [ra, rb] = affine_rep(x.value, o.tol);
  AffineIsometry<double> g = evaluate(w, ra, rb);
  LorentzFrame f = eigen_frame(g.A, o.tol);
  json res = {{"word", w.to_string()}, {"alpha", margulis_alpha(g, {0, 0, 0}, o.tol)}, {"frame", to_json(f)},
              {"class", to_string(classify_lorentz(g.A, o.tol))}};
  if (w == GroupWord("aa") && x.value > 1) res["alpha_closed_form"] = alpha_g2_closed_form(x.value, o.tol);
  if (w == GroupWord("aabb") && x.value > 1) res["alpha_stated_closed_form"] = alpha_g3_closed_form(x.value);
  json inputs = x_inputs(x);
  inputs["word"] = w.to_string();
  emit(envelope("margulis", inputs, res, o.tol, "float64"), o, out);
  return 0;
}

int cmd_properness(const ParsedX& x, const Output& o, std::ostream& out) {
  PropernessVerdict v = properness_verdict(x.value, o.tol);
  emit(envelope("properness", x_inputs(x), to_json(v), o.tol, "float64"), o, out);
  return 0;
}

int cmd_crystal_verify(const std::string& name, const Output& o, std::ostream& out) {
  auto facts = verify_crystal(name);
  bool ok = all_passed(facts);
  if (!o.as_json) {
    out << "crystal verify " << name << " (exact)\n";
    for (const auto& f : facts) out << (f.passed ? "  PASS  " : "  FAIL  ") << f.name << "  [" << f.detail << "]\n";
    out << (ok ? "all facts verified\n" : "verification FAILED\n");
    if (!o.out_file.empty()) {
      std::ofstream(o.out_file) << dump(envelope("crystal verify", {{"group", name}},
                                                 {{"facts", to_json(facts)}, {"passed", ok}}, o.tol, "exact"))
                                << "\n";
    }
  } else {
    emit(envelope("crystal verify", {{"group", name}}, {{"facts", to_json(facts)}, {"passed", ok}}, o.tol, "exact"), o,
         out);
  }
  return ok ? 0 : 1;
}

bool all_exact(const json& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!(is_exact_scalar(e) && !e.contains("surd")) && !e.is_number_integer() && !e.is_string()) return false;
  return true;
}

Rational rational_entry(const json& e) {
  if (is_exact_scalar(e)) return rational_from_pair(e["rat"]);
  if (e.is_number_integer()) return Rational(e.get<long long>());
  ParsedX p = parse_x_impl(e.get<std::string>());
  if (!p.exact) throw ParseError("matrix entry is not rational: " + e.get<std::string>());
  return *p.exact;
}

int cmd_crystal_classify(const std::string& matrix, const Output& o, std::ostream& out) {
  json m;
  try {
    m = json::parse(matrix);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("--matrix is not valid JSON: ") + e.what());
  }
  if (!m.is_array() || m.size() < 3 || m.size() > 4) throw ParseError("--matrix must be a 3x4 or 4x4 array");
  for (const auto& row : m)
    if (!row.is_array() || row.size() != 4) throw ParseError("--matrix rows must have 4 entries");
  json res;
  std::string backend;
  if (all_exact(m)) {
    Mat4<Rational> g = Mat4<Rational>::identity();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) g.a[i][j] = rational_entry(m[i][j]);
    res = to_json(classify_element(g));
    backend = "exact";
  } else {
    Mat4<double> g = Mat4<double>::identity();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        g.a[i][j] = is_exact_scalar(m[i][j]) ? to_double(rational_from_pair(m[i][j]["rat"])) : m[i][j].get<double>();
    res = to_json(classify_element(g, o.tol));
    backend = "float64";
  }
  emit(envelope("crystal classify", {{"matrix", m}}, res, o.tol, backend), o, out);
  return 0;
}

}  // namespace

ParsedX parse_x(const std::string& text) { return parse_x_impl(text); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of the trefoil knot group into quaternion and affine isometry groups", "trefoil"};
  app.require_subcommand(1);
  app.footer(kWordHelp);

  Output o;
  std::string xs, word, group, matrix, wrt;
  bool affine = false;

  auto* classify_cmd = app.add_subcommand("classify", "case region of x");
  classify_cmd->add_option("--x", xs, "parameter x = A^+ (decimal, p/q, sqrt(n)/m, cos(pi/n))")->required();
  add_output_flags(classify_cmd, o);

  auto* rep_cmd = app.add_subcommand("rep", "quaternions and matrices of the representation at x");
  rep_cmd->add_option("--x", xs, "parameter x")->required();
  rep_cmd->add_flag("--affine", affine, "include the affine deformation");
  add_output_flags(rep_cmd, o, true);

  auto* inv_cmd = app.add_subcommand("invariants", "geometric invariants and trigonometric identities at x");
  inv_cmd->add_option("--x", xs, "parameter x")->required();
  add_output_flags(inv_cmd, o);

  auto* fox_cmd = app.add_subcommand("fox", "Fox derivatives of a word");
  fox_cmd->add_option("--word", word, kWordHelp)->required();
  auto* fox_x = fox_cmd->add_option("--x", xs, "compare with direct composition at x");
  add_output_flags(fox_cmd, o);

  auto* rel_cmd = app.add_subcommand("relation-check", "residuals of a relator under the representations at x");
  rel_cmd->add_option("--x", xs, "parameter x")->required();
  rel_cmd->add_option("--word", word, "relator (default aba(bab)^-1)");
  add_output_flags(rel_cmd, o);

  auto* marg_cmd = app.add_subcommand("margulis", "Margulis invariant of an element (x > 1)");
  marg_cmd->add_option("--x", xs, "parameter x")->required();
  marg_cmd->add_option("--word", word, "group element (default a^2)");
  add_output_flags(marg_cmd, o);

  auto* prop_cmd = app.add_subcommand("properness", "non-properness verdict at x");
  prop_cmd->add_option("--x", xs, "parameter x")->required();
  add_output_flags(prop_cmd, o);

  auto* crystal_cmd = app.add_subcommand("crystal", "crystallographic groups");
  crystal_cmd->require_subcommand(1);
  auto* verify_cmd = crystal_cmd->add_subcommand("verify", "verify every stored fact exactly");
  verify_cmd->add_option("group", group, "P61, I213 or P4132")
      ->required()
      ->check(CLI::IsMember({"P61", "I213", "P4132"}));
  add_output_flags(verify_cmd, o);
  auto* cls_cmd = crystal_cmd->add_subcommand("classify", "type, axis and shift of a Euclidean isometry");
  cls_cmd->add_option("--matrix", matrix, "4x4 (or top 3x4) affine matrix as JSON; rationals as \"p/q\"")->required();
  add_output_flags(cls_cmd, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    auto px = [&] { return parse_x_impl(xs); };
    if (*classify_cmd) return cmd_classify(px(), o, out);
    if (*rep_cmd) return cmd_rep(px(), affine, o, out);
    if (*inv_cmd) return cmd_invariants(px(), o, out);
    if (*fox_cmd) return cmd_fox(word, *fox_x ? std::optional<ParsedX>(px()) : std::nullopt, o, out);
    if (*rel_cmd) return cmd_relation_check(px(), word, o, out);
    if (*marg_cmd) return cmd_margulis(px(), word, o, out);
    if (*prop_cmd) return cmd_properness(px(), o, out);
    if (*verify_cmd) return cmd_crystal_verify(group, o, out);
    if (*cls_cmd) return cmd_crystal_classify(matrix, o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace trefoil
