// Python bindings. Polynomials cross the boundary as tiltkit.Poly values,
// which also accept text ("1 - x + x^2") or a list of rational strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tiltkit/certificates.hpp"
#include "tiltkit/endo_verify.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/factorization.hpp"
#include "tiltkit/positivity.hpp"
#include "tiltkit/separation.hpp"
#include "tiltkit/tilting.hpp"

namespace py = pybind11;
using namespace tiltkit;

namespace {

Rational rat(const py::object& o) {
  if (py::isinstance<py::int_>(o)) return Rational::parse(py::str(o).cast<std::string>());
  return Rational::parse(o.cast<std::string>());
}

std::vector<std::string> coeff_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

std::string real_str(const Real& r) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << r;
  return os.str();
}

EndoTable make_table(const std::vector<std::pair<Poly, Poly>>& entries) {
  EndoTable t;
  for (const auto& [from, to] : entries) t.insert(from, to);
  return t;
}

}  // namespace

PYBIND11_MODULE(tiltkit, m) {
  m.doc() = "Exact tools for support-preserving maps of polynomials with non-negative coefficients";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::exception<Error>(m, "TiltkitError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (error name, message)
      PyErr_SetObject(error_type.get_stored().ptr(),
                      py::make_tuple(std::string(error_name(e.code())), e.what()).ptr());
    }
  });

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text) { return Poly::parse(text); }), py::arg("text"))
      .def(py::init([](const std::vector<py::object>& coeffs) {
             std::vector<Rational> c;
             for (const auto& o : coeffs) c.push_back(rat(o));
             return Poly(std::move(c));
           }),
           py::arg("coeffs"))
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("coeffs", &coeff_strings)
      .def("eval", [](const Poly& p, const py::object& x) { return p.eval(rat(x)).str(); })
      .def("normalize", [](const Poly& p) { return normalize(p); })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__str__", &Poly::str)
      .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "')"; });
  py::implicitly_convertible<std::string, Poly>();
  py::implicitly_convertible<py::list, Poly>();

  m.def("div_exact", &div_exact);
  m.def("is_nonneg", &is_nonneg);
  m.def("positive_root_count", &positive_root_count);
  m.def("in_M", &in_M);
  m.def("tilt", [](const Poly& p, const py::object& gamma) { return tilt(p, rat(gamma)); }, py::arg("p"),
        py::arg("gamma"));

  m.def(
      "polya_exponent",
      [](const Poly& q, const py::object& gamma, unsigned cap) {
        const auto c = polya_exponent(q, rat(gamma), cap);
        return py::dict(py::arg("gamma") = c.gamma.str(), py::arg("n") = c.n, py::arg("product") = c.product);
      },
      py::arg("q"), py::arg("gamma"), py::arg("cap") = 500);

  m.def(
      "separate",
      [](const Poly& p, const Poly& pprime, unsigned long denom_cap) {
        const auto w = denom_cap > 0 ? separate_dense(p, pprime, denom_cap) : separate(p, pprime);
        return py::dict(py::arg("q") = w.q, py::arg("neg_index") = w.neg_index,
                        py::arg("verified") = verify_witness(p, pprime, w));
      },
      py::arg("p"), py::arg("pprime"), py::arg("denom_cap") = 0);

  m.def(
      "factor_real",
      [](const Poly& p, double precision) {
        const auto f = factor_real(p, precision);
        py::list lin, quad;
        for (const auto& l : f.linear) lin.append(py::make_tuple(real_str(l.b), l.multiplicity));
        for (const auto& q : f.quadratic) quad.append(py::make_tuple(real_str(q.a), real_str(q.gamma), q.multiplicity));
        return py::dict(py::arg("scalar") = f.scalar.str(), py::arg("monomial_power") = f.monomial_power,
                        py::arg("linear") = lin, py::arg("quadratic") = quad,
                        py::arg("residual") = real_str(reconstruction_residual(p, f)));
      },
      py::arg("p"), py::arg("precision") = 1e-12);

  m.def(
      "enumerate_P_factorizations",
      [](const Poly& p, unsigned degree_cap) {
        py::list out;
        for (const auto& f : enumerate_P_factorizations(p, degree_cap)) {
          py::list groups;
          for (const auto& g : f.groups) {
            if (g.exact) {
              groups.append(py::cast(*g.exact));
            } else {
              py::list approx;
              for (const auto& c : g.approx) approx.append(real_str(c));
              groups.append(approx);
            }
          }
          out.append(py::dict(py::arg("monomial_power") = f.monomial_power, py::arg("groups") = groups));
        }
        return out;
      },
      py::arg("p"), py::arg("degree_cap") = 12);

  m.def(
      "extend_map",
      [](const std::vector<std::pair<Poly, Poly>>& table, const Poly& q) { return extend_map(make_table(table), q); },
      py::arg("table"), py::arg("q"));
  m.def("extension_keys", [](const Poly& q) { return extension_keys(q); }, py::arg("q"));

  m.def(
      "verify_is_tilting",
      [](const std::vector<std::pair<Poly, Poly>>& table, const std::vector<Poly>& generators) {
        const auto v = verify_is_tilting(make_table(table), generators);
        if (v.gamma) return py::dict(py::arg("tilting") = true, py::arg("gamma") = v.gamma->str());
        const auto& c = *v.counterexample;
        return py::dict(py::arg("tilting") = false, py::arg("constraint") = std::string(constraint_name(c.constraint)),
                        py::arg("detail") = c.detail, py::arg("residual") = c.residual.str());
      },
      py::arg("table"), py::arg("generators"));

  m.def("interval_orbit", [](const py::object& a) { return interval_orbit(rat(a)); }, py::arg("a"));
  m.def("approx_23", [](double y, double eps) { return approx_23(y, eps); }, py::arg("y"), py::arg("eps"));
}
