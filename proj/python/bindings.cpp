#include "siegel/cli.hpp"
#include "siegel/diffop.hpp"
#include "siegel/dims.hpp"
#include "siegel/eisenstein.hpp"
#include "siegel/ring.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace siegel;

namespace {

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

EtaIndex to_eta(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple from_eta(EtaIndex e) { return {e.x, e.y, e.z}; }

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(format_rational(q));
}

Rational rational_from(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Fourier expansions of Siegel modular forms on Gamma(1,6)";

  py::register_exception<NotSquareError>(m, "NotSquareError", PyExc_ArithmeticError);
  py::register_exception<NotDivisibleError>(m, "NotDivisibleError", PyExc_ArithmeticError);

  py::class_<FourierSeries>(m, "Series")
      .def(py::init<int, int>(), py::arg("weight"), py::arg("prec"))
      .def_property_readonly("weight", &FourierSeries::weight)
      .def_property_readonly("prec", &FourierSeries::prec)
      .def("coeff", [](const FourierSeries& f, const Triple& eta) { return fraction(f.coeff(to_eta(eta))); })
      .def("set",
           [](FourierSeries& f, const Triple& eta, const py::handle& value) { f.set(to_eta(eta), rational_from(value)); })
      .def("terms",
           [](const FourierSeries& f) {
             py::list out;
             for (const auto& [eta, c] : f.terms()) out.append(py::make_tuple(from_eta(eta), fraction(c)));
             return out;
           })
      .def("truncated", &FourierSeries::truncated, py::arg("prec"))
      .def("is_zero", &FourierSeries::is_zero)
      .def("__mul__", [](const FourierSeries& a, const FourierSeries& b) { return multiply(a, b); })
      .def("__add__", [](const FourierSeries& a, const FourierSeries& b) { return linear_combine({{1, a}, {1, b}}); })
      .def("__sub__", [](const FourierSeries& a, const FourierSeries& b) { return linear_combine({{1, a}, {-1, b}}); })
      .def("scaled", [](const FourierSeries& f, const py::handle& c) { return scale(rational_from(c), f); })
      .def("__eq__", [](const FourierSeries& a, const FourierSeries& b) { return a == b; })
      .def("__repr__", [](const FourierSeries& f) {
        return "<Series weight=" + std::to_string(f.weight()) + " prec=" + std::to_string(f.prec()) + " nonzero=" +
               std::to_string(f.terms().size()) + ">";
      });

  m.def("norm_m", [](const Triple& eta) { return norm_m(to_eta(eta)); });
  m.def("enumerate_cone", [](std::int64_t g) {
    std::vector<Triple> out;
    for (auto e : enumerate_cone(g)) out.push_back(from_eta(e));
    return out;
  });
  m.def("eisenstein_coefficient",
        [](int k, const Triple& eta) { return fraction(eisenstein_coefficient({k, 1, 6}, to_eta(eta))); },
        py::arg("k"), py::arg("eta"));
  m.def("eisenstein_series", [](int k, int prec) { return eisenstein_series({k, 1, 6}, prec); }, py::arg("k"),
        py::arg("prec"));
  m.def("build_generators",
        [](int prec) {
          const GeneratorSet g = build_generators(prec);
          py::dict out;
          for (const auto& name : generator_names()) out[py::str(name)] = g.get(name);
          return out;
        },
        py::arg("prec"));
  m.def("bracket", &bracket);
  m.def("sqrt_monic", [](const FourierSeries& g, const Triple& lead, int sign) { return sqrt_monic(g, to_eta(lead), sign); });
  m.def("divide_exact", [](const FourierSeries& g, const FourierSeries& b, const Triple& lead) {
    return divide_exact(g, b, to_eta(lead));
  });
  m.def("rank_of_span", [](const std::vector<FourierSeries>& forms) { return rank_of_span(forms); });

  m.def("dim_cusp", &dim_cusp, py::arg("k"), py::arg("p") = 3);
  m.def("dim_modular", &dim_modular, py::arg("k"));
  m.def("genfun_coeff", &genfun_coeff, py::arg("k"));

  m.def("expand",
        [](const std::string& form, int prec, const std::string& format, std::optional<std::string> cache_dir) {
          CommonOptions opts;
          opts.cache_dir = std::move(cache_dir);
          const auto r = cmd_expand(opts, form, prec, format);
          if (r.exit_code != kExitOk) throw std::invalid_argument(r.err);
          return r.out;
        },
        py::arg("form"), py::arg("prec") = kDefaultPrec, py::arg("format") = "csv", py::arg("cache_dir") = py::none());
  m.def("verify",
        [](const std::string& suite, int prec) {
          const auto r = cmd_verify({}, suite, prec);
          if (r.exit_code == kExitUsage) throw std::invalid_argument(r.err);
          return py::make_tuple(r.exit_code == kExitOk, r.out);
        },
        py::arg("suite"), py::arg("prec") = kDefaultPrec);
}
