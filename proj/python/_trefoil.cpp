#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trefoil/cli.hpp"
#include "trefoil/report.hpp"

namespace py = pybind11;
using namespace trefoil;

namespace {

std::vector<std::vector<double>> rows(const Mat4<double>& m) {
  std::vector<std::vector<double>> r;
  for (const auto& row : m.a) r.emplace_back(row.begin(), row.end());
  return r;
}

}  // namespace

PYBIND11_MODULE(_trefoil, m) {
  m.doc() = "Trefoil knot group representations into quaternion and affine isometry groups";

  py::register_exception<Error>(m, "TrefoilError");

  m.def("classify", [](double x, double tol) { return std::string(to_string(classify(x, tol))); }, py::arg("x"),
        py::arg("tolerance") = kDefaultTol);

  m.def(
      "affine_matrices",
      [](double x, double tol) {
        auto [a, b] = affine_rep(x, tol);
        return std::make_pair(rows(affine_matrix4(a)), rows(affine_matrix4(b)));
      },
      py::arg("x"), py::arg("tolerance") = kDefaultTol, "4x4 matrices of rho(a), rho(b).");

  m.def(
      "braid_residual",
      [](double x, const std::string& word, double tol) {
        auto [a, b] = affine_rep(x, tol);
        GroupWord w = GroupWord::parse(word);
        return max_abs_diff(evaluate(w, a, b), AffineIsometry<double>::identity(a.params()));
      },
      py::arg("x"), py::arg("word") = "abaBAB", py::arg("tolerance") = kDefaultTol);

  m.def(
      "margulis_alpha",
      [](double x, const std::string& word, std::array<double, 3> probe) {
        auto [a, b] = affine_rep(x);
        return trefoil::margulis_alpha(evaluate(GroupWord::parse(word), a, b), {probe[0], probe[1], probe[2]});
      },
      py::arg("x"), py::arg("word") = "a^2", py::arg("probe") = std::array<double, 3>{0, 0, 0});

  m.def(
      "fox_derivative", [](const std::string& word, char g) { return trefoil::fox_derivative(GroupWord::parse(word), g).to_string(); },
      py::arg("word"), py::arg("generator"));

  m.def("reduce_word", [](const std::string& word) { return GroupWord::parse(word).to_string(); });

  m.def(
      "verify_crystal",
      [](const std::string& name) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& f : trefoil::verify_crystal(name)) out.emplace_back(f.name, f.passed, f.detail);
        return out;
      },
      py::arg("name"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = trefoil::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}
