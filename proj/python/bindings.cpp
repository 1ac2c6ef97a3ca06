#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ridgecalc/cli.hpp"
#include "ridgecalc/errors.hpp"
#include "ridgecalc/json_io.hpp"
#include "ridgecalc/numharness.hpp"
#include "ridgecalc/ridge.hpp"

namespace py = pybind11;
using namespace ridgecalc;

namespace {

struct Field {
  BasisPtr basis;
};

std::vector<KNumber> parse_steps(const BasisPtr& basis, const std::vector<std::string>& steps) {
  std::vector<KNumber> out;
  for (const auto& s : steps) out.push_back(parse_knumber(basis, s));
  return out;
}

KNumber extract(const std::string& problem, std::size_t target, const std::vector<std::string>& steps,
                const std::string& at) {
  const RidgeSum s = problem_from_json(Json::parse(problem));
  if (target >= s.k()) throw UsageError("target index out of range");
  const auto h = parse_steps(s.basis(), steps);
  const MultivariateFn f = [&s](std::span<const KNumber> x) { return s(x); };
  const auto dirs = s.directions();
  return extract_component_difference(f, dirs, target, h, parse_knumber(s.basis(), at));
}

std::string smooth(const std::string& problem, std::size_t samples, std::uint64_t seed) {
  const RidgeSum s = problem_from_json(Json::parse(problem));
  const SmoothDecomposition d = smooth_decomposition(s, {samples, samples, seed});
  return solution_to_json({d.g, d.p, d.certificate, s}).dump();
}

py::dict float_check(const std::string& problem, std::size_t target, const std::vector<std::string>& steps,
                     double tol) {
  const RidgeSum s = problem_from_json(Json::parse(problem));
  const FloatReport r = float_extract_check(s, target, parse_steps(s.basis(), steps), FloatGrid::default_line(), tol);
  py::list rows;
  for (const auto& row : r.rows) rows.append(py::make_tuple(row.t, row.exact, row.approx, row.abs_err));
  py::dict out;
  out["rows"] = rows;
  out["max_abs_err"] = r.max_abs_err;
  out["tol"] = r.tol;
  out["pass"] = r.pass;
  return out;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ridge-function decomposition over multiquadratic fields";

  auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", usage.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::vector<long> radicals) { return Field{RadicalBasis::make(std::move(radicals))}; }),
           py::arg("radicals") = std::vector<long>{})
      .def_property_readonly("radicals", [](const Field& f) { return f.basis->radicands(); })
      .def_property_readonly("dimension", [](const Field& f) { return f.basis->dimension(); })
      .def("__call__", [](const Field& f, const std::string& text) { return parse_knumber(f.basis, text); },
           py::arg("text"), "Parse an element, e.g. \"1/2 + 3*sqrt2\".")
      .def("__eq__", [](const Field& a, const Field& b) { return *a.basis == *b.basis; });

  py::class_<KNumber>(m, "KNumber")
      .def_property_readonly("field", [](const KNumber& a) { return Field{a.basis()}; })
      .def("is_zero", &KNumber::is_zero)
      .def("is_rational", &KNumber::is_rational)
      .def("sign", [](const KNumber& a) { return sign(a); })
      .def("to_float", &to_float, py::arg("bits") = 64)
      .def("__float__", [](const KNumber& a) { return to_float(a); })
      .def("to_json", [](const KNumber& a) { return to_json(a).dump(); })
      .def("__str__", &KNumber::to_string)
      .def("__repr__", [](const KNumber& a) { return "KNumber(" + a.to_string() + ")"; })
      .def("__add__", [](const KNumber& a, const KNumber& b) { return a + b; })
      .def("__sub__", [](const KNumber& a, const KNumber& b) { return a - b; })
      .def("__mul__", [](const KNumber& a, const KNumber& b) { return a * b; })
      .def("__truediv__", [](const KNumber& a, const KNumber& b) { return a / b; })
      .def("__neg__", [](const KNumber& a) { return -a; })
      .def("__eq__", [](const KNumber& a, const KNumber& b) { return a == b; })
      .def("__lt__", [](const KNumber& a, const KNumber& b) { return compare(a, b) < 0; });

  m.def("extract", &extract, py::arg("problem"), py::arg("target"), py::arg("steps"), py::arg("at") = "0",
        "Delta_{h_1..h_{k-1}} f_target(at) from evaluations of f; target is 0-based.");
  m.def("smooth", &smooth, py::arg("problem"), py::arg("samples") = 50, py::arg("seed") = 0,
        "Solution JSON text with g, P, the certificate and the problem.");
  m.def("float_check", &float_check, py::arg("problem"), py::arg("target"), py::arg("steps"),
        py::arg("tol") = kDefaultTolerance);
  m.def("run_cli", &run, py::arg("args"), "(exit code, stdout, stderr) for one command line.");
}
