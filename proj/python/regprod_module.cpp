#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regprod/gamma.hpp"
#include "regprod/product.hpp"
#include "regprod/zeta.hpp"

namespace py = pybind11;
using namespace regprod;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alternating zeta-regularized products and the modified gamma function";

  py::class_<EvalConfig>(m, "EvalConfig")
      .def(py::init<>())
      .def_readwrite("target_rel_error", &EvalConfig::target_rel_error)
      .def_readwrite("max_terms", &EvalConfig::max_terms)
      .def_readwrite("em_bernoulli_terms", &EvalConfig::em_bernoulli_terms)
      .def_readwrite("shift_threshold", &EvalConfig::shift_threshold)
      .def_readwrite("contour_radius", &EvalConfig::contour_radius)
      .def_readwrite("contour_nodes", &EvalConfig::contour_nodes)
      .def("validate", &EvalConfig::validate);

  py::class_<SeriesResult>(m, "SeriesResult")
      .def_readonly("value", &SeriesResult::value)
      .def_readonly("error_estimate", &SeriesResult::error_estimate)
      .def_readonly("terms_used", &SeriesResult::terms_used)
      .def_readonly("converged", &SeriesResult::converged)
      .def_readonly("branch_warning", &SeriesResult::branch_warning)
      .def_property_readonly(
          "method", [](const SeriesResult& r) { return method_name(r.method); })
      .def("__repr__", [](const SeriesResult& r) {
        return "SeriesResult(value=(" + std::to_string(r.value.real()) + "," +
               std::to_string(r.value.imag()) + "), converged=" +
               (r.converged ? "True" : "False") + ")";
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("lhs", &VerificationReport::lhs)
      .def_readonly("rhs", &VerificationReport::rhs)
      .def_readonly("abs_err", &VerificationReport::abs_err)
      .def_readonly("rel_err", &VerificationReport::rel_err)
      .def_readonly("tol", &VerificationReport::tol)
      .def_readonly("pass_", &VerificationReport::pass)
      .def_readonly("metadata", &VerificationReport::metadata)
      .def_property_readonly("identity", [](const VerificationReport& r) {
        return identity_name(r.identity);
      });

  py::class_<ProductSpec>(m, "ProductSpec")
      .def(py::init([](std::vector<Cplx> shifts, long long cutoff) {
             ProductSpec spec{std::move(shifts), cutoff};
             spec.validate();
             return spec;
           }),
           py::arg("shifts"), py::arg("cutoff") = -1)
      .def_readonly("shifts", &ProductSpec::shifts)
      .def_property_readonly("cutoff", &ProductSpec::resolved_cutoff);

  const EvalConfig defaults{};

  m.def(
      "alt_hurwitz_zeta",
      [](Cplx s, Cplx z, const std::string& method, const EvalConfig& cfg) {
        return alt_hurwitz_zeta(
            s, z, method == "direct" ? AltZetaMethod::direct : AltZetaMethod::split,
            cfg);
      },
      py::arg("s"), py::arg("z"), py::arg("method") = "split",
      py::arg("config") = defaults);

  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("z"),
        py::arg("config") = defaults);
  m.def("dirichlet_eta", &dirichlet_eta, py::arg("s"), py::arg("config") = defaults);

  m.def(
      "gamma_tilde",
      [](Cplx z, const std::string& route, const EvalConfig& cfg) {
        const GammaTildeRoute r = route == "product"
                                      ? GammaTildeRoute::weierstrass_product
                                  : route == "series" ? GammaTildeRoute::log_series
                                                      : GammaTildeRoute::closed_form;
        return gamma_tilde(z, r, cfg);
      },
      py::arg("z"), py::arg("route") = "closed", py::arg("config") = defaults);

  m.def("psi_tilde", &psi_tilde, py::arg("z"));
  m.def("psi_tilde_n", &psi_tilde_n, py::arg("n"), py::arg("z"),
        py::arg("config") = defaults);
  m.def(
      "mod_stieltjes",
      [](int k, Cplx z, const EvalConfig& cfg) {
        return mod_stieltjes(k, z, cfg).value;
      },
      py::arg("k"), py::arg("z"), py::arg("config") = defaults);

  py::enum_<TailMethod>(m, "TailMethod")
      .value("eta_expansion", TailMethod::eta_expansion)
      .value("paired_direct", TailMethod::paired_direct);

  m.def("reg_alt_product", &reg_alt_product, py::arg("spec"),
        py::arg("config") = defaults,
        py::arg("tail") = TailMethod::eta_expansion);
  m.def("verify_mizuno", &verify_mizuno, py::arg("spec"), py::arg("tol") = 1e-8,
        py::arg("config") = defaults);
  m.def("kurokawa_wakayama", &kurokawa_wakayama, py::arg("n"), py::arg("x"),
        py::arg("y"), py::arg("tol") = 1e-8, py::arg("config") = defaults);
  m.def("verify_wallis", &verify_wallis, py::arg("pairs") = 100000,
        py::arg("tol") = 1e-9);
  m.def("classical_lerch_check", &classical_lerch_check, py::arg("z"),
        py::arg("tol") = 1e-8, py::arg("config") = defaults);
  m.def("verify_suite", &verify_suite, py::arg("seed") = 42,
        py::arg("cases") = 100, py::arg("tol") = 1e-8,
        py::arg("config") = defaults);
}
