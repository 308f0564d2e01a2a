#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capslep/capop.hpp"
#include "capslep/cli.hpp"
#include "capslep/eigensolvers.hpp"
#include "capslep/flm.hpp"
#include "capslep/harmonics.hpp"
#include "capslep/io.hpp"
#include "capslep/legendre.hpp"
#include "capslep/quadrature.hpp"
#include "capslep/slepian.hpp"
#include "capslep/verify.hpp"

namespace py = pybind11;
using namespace capslep;

namespace {

using Array = py::array_t<double>;

Array to_array(const std::vector<double>& v) { return Array(static_cast<py::ssize_t>(v.size()), v.data()); }

Array to_matrix(const std::vector<double>& full, int n) {
  Array a({n, n});
  std::copy(full.begin(), full.end(), a.mutable_data());
  return a;
}

Array rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<py::ssize_t>(rows.size());
  const py::ssize_t c = n ? static_cast<py::ssize_t>(rows[0].size()) : 0;
  Array a({n, c});
  auto m = a.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return a;
}

capop::FixedOrderProblem problem(int L, double theta, int m) { return {capop::CapProblem(L, theta), m}; }

harmonics::Sign parse_sign(const std::string& s) {
  if (s == "+") return harmonics::Sign::plus;
  if (s == "-") return harmonics::Sign::minus;
  throw DomainError("sign must be '+' or '-'");
}

const char* basis_name(harmonics::Basis b) {
  switch (b) {
    case harmonics::Basis::tau: return "tau";
    case harmonics::Basis::polar: return "polar";
    case harmonics::Basis::cartesian: return "cartesian";
  }
  return "?";
}

py::dict tangent_dict(const harmonics::TangentValue& v) {
  py::dict d;
  d["basis"] = basis_name(v.basis);
  const int n = v.basis == harmonics::Basis::cartesian ? 3 : 2;
  py::list c;
  for (int i = 0; i < n; ++i) c.append(v.components[static_cast<std::size_t>(i)]);
  d["components"] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Tangential vector Slepian functions on a spherical cap";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  // The remaining library errors derive from std::out_of_range, std::length_error
  // and std::runtime_error and surface as IndexError, ValueError and RuntimeError.

  // Scalar functions.
  mod.def("eval_U", &legendre::eval_U, py::arg("l"), py::arg("m"), py::arg("x"));
  mod.def("eval_U_column", [](int m, int L, double x) { return to_array(legendre::eval_U_column(m, L, x)); },
          py::arg("m"), py::arg("L"), py::arg("x"));
  mod.def("eval_F", &flm::eval_F, py::arg("l"), py::arg("m"), py::arg("x"));
  mod.def("eval_F_column", [](int m, int L, double x) { return to_array(flm::eval_F_column(m, L, x)); },
          py::arg("m"), py::arg("L"), py::arg("x"));
  mod.def("eval_F_via_U", &flm::eval_F_via_U, py::arg("l"), py::arg("m"), py::arg("x"));
  mod.def("kernel_K", &flm::kernel_K, py::arg("m"), py::arg("L"), py::arg("x"), py::arg("xp"));
  mod.def("gauss_legendre", [](int n) {
    const auto r = quadrature::gauss_legendre(n);
    return py::make_tuple(to_array(r.nodes), to_array(r.weights));
  }, py::arg("n"));

  // Harmonics. Points are (theta, phi) in radians.
  mod.def("eval_Y", [](int l, int m, double theta, double phi) { return harmonics::eval_Y(l, m, {theta, phi}); },
          py::arg("l"), py::arg("m"), py::arg("theta"), py::arg("phi"));
  mod.def("eval_Q", [](int l, int m, const std::string& sign, double theta, double phi) {
    return tangent_dict(harmonics::eval_Q(l, m, parse_sign(sign), {theta, phi}));
  }, py::arg("l"), py::arg("m"), py::arg("sign"), py::arg("theta"), py::arg("phi"));

  // Operators. theta is the cap half-angle in radians.
  mod.def("degrees_to_radians", &io::degrees_to_radians, py::arg("degrees"));
  mod.def("shannon", [](int L, double theta) { return capop::shannon(capop::CapProblem(L, theta)); },
          py::arg("L"), py::arg("theta"));
  mod.def("partial_shannon", [](int L, double theta, int m) { return capop::partial_shannon(problem(L, theta, m)); },
          py::arg("L"), py::arg("theta"), py::arg("m"));
  mod.def("assemble_K", [](int L, double theta, int m) {
    const auto k = capop::assemble_K(problem(L, theta, m));
    return to_matrix(k.to_full(), k.size());
  }, py::arg("L"), py::arg("theta"), py::arg("m"));
  mod.def("assemble_J", [](int L, double theta, int m) {
    const auto j = capop::assemble_J(problem(L, theta, m));
    return py::make_tuple(to_array(j.diag), to_array(j.offdiag));
  }, py::arg("L"), py::arg("theta"), py::arg("m"));

  py::class_<slepian::FixedOrderSolution>(mod, "Solution")
      .def_property_readonly("L", [](const slepian::FixedOrderSolution& s) { return s.problem().cap().bandlimit(); })
      .def_property_readonly("theta", [](const slepian::FixedOrderSolution& s) { return s.problem().cap().theta(); })
      .def_property_readonly("m", [](const slepian::FixedOrderSolution& s) { return s.problem().order(); })
      .def_property_readonly("chi", [](const slepian::FixedOrderSolution& s) { return to_array(s.chi()); })
      .def_property_readonly("eta", [](const slepian::FixedOrderSolution& s) { return to_array(s.eta()); })
      .def_property_readonly("g", [](const slepian::FixedOrderSolution& s) { return rows_to_matrix(s.g()); },
                             "Row n-1 holds the coefficients of rank n for degrees lmin..L.")
      .def_property_readonly("near_ties", &slepian::FixedOrderSolution::near_ties)
      .def_property_readonly("opposite_ordering", &slepian::FixedOrderSolution::opposite_ordering)
      .def("__len__", &slepian::FixedOrderSolution::size)
      .def("eval_G", [](const slepian::FixedOrderSolution& s, int n, double x) { return slepian::eval_G(s, n, x); },
           py::arg("n"), py::arg("x"))
      .def("concentration_ratio", [](const slepian::FixedOrderSolution& s, int n) {
        return slepian::concentration_ratio(s, n);
      }, py::arg("n"))
      .def("eval_field", [](const slepian::FixedOrderSolution& s, int n, const std::string& sign, double theta,
                            double phi) {
        return tangent_dict(slepian::eval_eigenfield({&s, n, parse_sign(sign)}, {theta, phi}));
      }, py::arg("n"), py::arg("sign"), py::arg("theta"), py::arg("phi"))
      .def("to_json", [](const slepian::FixedOrderSolution& s, double theta_degrees) {
        return io::to_json(io::to_solution_file(s, theta_degrees));
      }, py::arg("theta_degrees"))
      .def_static("from_json", [](const std::string& text) { return io::from_solution_file(io::from_json(text)); },
                  py::arg("text"));

  mod.def("solve_order", [](int L, double theta, int m) { return slepian::solve_order(problem(L, theta, m)); },
          py::arg("L"), py::arg("theta"), py::arg("m"));

  mod.def("error_analysis", [](int L, double theta, int m) {
    const auto ea = slepian::error_analysis(capop::CapProblem(L, theta), m);
    py::list rows;
    for (const auto& r : ea.rows) {
      py::dict d;
      d["n"] = r.n;
      d["eta"] = r.eta;
      d["chi"] = r.chi;
      d["gap_eta"] = r.gap_eta;
      d["gap_chi"] = r.gap_chi;
      d["err_K"] = r.err_K;
      d["err_J"] = r.err_J;
      rows.append(d);
    }
    return rows;
  }, py::arg("L"), py::arg("theta"), py::arg("m"));

  mod.def("verify", [](int L, double theta) {
    const auto report = verify::run_invariants(capop::CapProblem(L, theta));
    py::list rows;
    for (const auto& r : report.results) {
      py::dict d;
      d["group"] = r.group;
      d["name"] = r.name;
      d["value"] = r.value;
      d["tolerance"] = r.tolerance;
      d["passed"] = r.passed;
      d["skipped"] = r.skipped;
      rows.append(d);
    }
    return py::make_tuple(report.passed(), rows);
  }, py::arg("L"), py::arg("theta"));

  mod.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line program in-process; returns (exit code, stdout, stderr).");
}
