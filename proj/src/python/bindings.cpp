#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lgmk/cli.hpp"
#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"
#include "lgmk/gammaosc.hpp"
#include "lgmk/gwabs.hpp"
#include "lgmk/lgmirror.hpp"
#include "lgmk/relmirror.hpp"
#include "lgmk/report.hpp"

namespace py = pybind11;
using namespace lgmk;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them in Fraction.
std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

py::dict report_dict(const GammaReport& r) {
  py::dict d;
  d["pair"] = r.pair;
  d["cycle"] = to_string(r.cycle);
  d["sheaf"] = to_string(r.sheaf);
  d["phi"] = r.phi;
  d["z"] = r.z;
  d["t"] = r.t;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["abs_err"] = r.abs_err;
  d["rel_err"] = r.rel_err;
  d["truncation"] = r.truncation;
  d["exact_match"] = r.exact_match ? py::cast(*r.exact_match) : py::none();
  d["quad_error"] = r.quad_error;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Landau-Ginzburg mirrors of log Calabi-Yau pairs";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);

  py::class_<ToricFanoPair>(m, "Pair")
      .def_readonly("name", &ToricFanoPair::name)
      .def_readonly("n", &ToricFanoPair::n)
      .def_property_readonly("m", &ToricFanoPair::m)
      .def_readonly("r", &ToricFanoPair::r)
      .def_readonly("rays", &ToricFanoPair::rays)
      .def_readonly("max_cones", &ToricFanoPair::max_cones)
      .def_readonly("intersection", &ToricFanoPair::intersection)
      .def("__repr__", [](const ToricFanoPair& p) { return "<Pair " + p.name + ">"; });

  m.def("preset_names", &preset_names);
  m.def("load_preset", &load_preset, py::arg("name"));
  m.def("load_json", &load_pair_json, py::arg("text"));
  m.def("load", &load_pair, py::arg("preset_or_path"));

  m.def(
      "potential",
      [](const ToricFanoPair& p, int order, int chart) {
        const LGPotential w = potential(p, order);
        return w.charts.at(chart).to_string({}, w.chart_names.at(chart), false);
      },
      py::arg("pair"), py::arg("order") = 3, py::arg("chart") = 0);

  m.def(
      "periods",
      [](const ToricFanoPair& p, int order, const std::string& kind) {
        if (kind == "regularized") return rational_strings(coefficients_by_degree(regularized_quantum_period(p, order)));
        if (kind == "quantum") return rational_strings(coefficients_by_degree(quantum_period(p, order)));
        if (kind == "classical")
          return rational_strings(coefficients_by_degree(classical_period(potential(p, order).charts.at(0))));
        throw DomainError("unknown period kind '" + kind + "'");
      },
      py::arg("pair"), py::arg("order"), py::arg("kind") = "regularized",
      "Coefficients by anticanonical degree 0..order.");

  m.def(
      "theta_product",
      [](const ToricFanoPair& p, const IntVec& a, const IntVec& b, int order) {
        py::dict out;
        for (const auto& [q, s] : theta_product(p, a, b, order).coeffs)
          out[py::tuple(py::cast(q))] = s.to_string({}, {}, false);
        return out;
      },
      py::arg("pair"), py::arg("p1"), py::arg("p2"), py::arg("order") = 8);

  m.def(
      "qde",
      [](const std::vector<std::string>& seq, int max_order, int max_degree, int held_out) {
        std::vector<Rational> a;
        for (const auto& s : seq) a.push_back(parse_rational(s));
        const Recurrence r = qde_recurrence(a, max_order, max_degree, held_out);
        py::dict d;
        d["found"] = r.found;
        d["order"] = r.order;
        d["degree"] = r.degree;
        d["recurrence"] = r.to_string();
        std::vector<std::vector<std::string>> coeffs;
        for (const auto& poly : r.coeffs) {
          std::vector<std::string> row;
          for (const auto& c : poly) row.push_back(c.get_str());
          coeffs.push_back(row);
        }
        d["coefficients"] = coeffs;
        return d;
      },
      py::arg("sequence"), py::arg("max_order") = 4, py::arg("max_degree") = 4, py::arg("held_out") = 5);

  m.def(
      "mirror_map_coefficients",
      [](const ToricFanoPair& p, int order) {
        return rational_strings(coefficients_by_degree(strip_chart(mirror_correction(p, mirror_map(p, order), order))));
      },
      py::arg("pair"), py::arg("order"));

  m.def(
      "proper_potential",
      [](const ToricFanoPair& p, int order) { return proper_potential(p, order).potential.to_string({}, {"x"}, false); },
      py::arg("pair"), py::arg("order"));

  m.def("reflection_check", &reflection_check, py::arg("c"));
  m.def("zeta", [](int k) { return zeta(k).convert_to<double>(); }, py::arg("k"));
  m.def("euler_gamma", [] { return euler_gamma().convert_to<double>(); });
  m.def(
      "gamma_class",
      [](const ToricFanoPair& p) {
        const GammaClass g = gamma_class(p);
        std::vector<double> out;
        for (const auto& c : g.coeffs) out.push_back(c.convert_to<double>());
        return out;
      },
      py::arg("pair"), "Coefficients in the cohomology basis.");

  m.def(
      "verify",
      [](const ToricFanoPair& p, const std::string& cycle, const std::string& sheaf, const std::string& phi, double z,
         double t, int order, int panels, double tol) {
        VerifyOptions opt;
        opt.phi_label = phi;
        opt.quad.panels = panels;
        opt.tolerance = tol;
        return report_dict(verify(p, parse_cycle(cycle), parse_sheaf(sheaf), parse_phi(p, phi), z, t, order, opt));
      },
      py::arg("pair"), py::arg("cycle") = "compact", py::arg("sheaf") = "Opt", py::arg("phi") = "1",
      py::arg("z") = 1.0, py::arg("t") = 0.1, py::arg("order") = 10, py::arg("panels") = 0, py::arg("tol") = 1e-6);

  m.def(
      "lhs_real",
      [](const ToricFanoPair& p, const std::string& phi, double z, double t, int panels) {
        QuadConfig q;
        q.panels = panels;
        const RealIntegral r = lhs_real(p, parse_phi(p, phi), z, t, q);
        return py::make_tuple(r.value, r.error);
      },
      py::arg("pair"), py::arg("phi") = "1", py::arg("z") = 1.0, py::arg("t") = 0.1, py::arg("panels") = 0);

  m.def(
      "rhs_gamma",
      [](const ToricFanoPair& p, const std::string& sheaf, const std::string& phi, double z, double t, int order) {
        return rhs_gamma(p, parse_sheaf(sheaf), parse_phi(p, phi), z, t, order).value;
      },
      py::arg("pair"), py::arg("sheaf") = "OX", py::arg("phi") = "1", py::arg("z") = 1.0, py::arg("t") = 0.1,
      py::arg("order") = 12);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
