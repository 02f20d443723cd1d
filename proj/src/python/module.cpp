#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "monlef/binomial.hpp"
#include "monlef/decompose.hpp"
#include "monlef/errors.hpp"
#include "monlef/json_io.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/maci.hpp"
#include "monlef/parse.hpp"
#include "monlef/selftest.hpp"
#include "monlef/table.hpp"
#include "monlef/version.hpp"

namespace py = pybind11;
using namespace monlef;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null:
        return py::none();
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& item : j)
            out.append(json_to_py(item));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items())
            out[py::str(key)] = json_to_py(value);
        return out;
    }
    default:
        return py::none();
    }
}

MonomialIdeal make_ideal(const std::string& text, std::optional<int> n) {
    return parse_ideal(text, n);
}

Table make_table(const std::string& json_text) {
    return table_from_json(Json::parse(json_text));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic toolkit for decomposing and gluing Artinian "
              "monomial algebras and deciding the Lefschetz properties";
    m.attr("__version__") = kVersion;

    py::register_exception<inapplicable_error>(m, "InapplicableError",
                                               PyExc_ValueError);
    py::register_exception<cap_exceeded_error>(m, "CapExceededError",
                                               PyExc_RuntimeError);

    py::class_<Monomial>(m, "Monomial")
        .def(py::init([](const std::string& text, std::optional<int> n) {
                 return parse_monomial(text, n);
             }),
             py::arg("text"), py::arg("n") = std::nullopt)
        .def_property_readonly("exponents",
                               [](const Monomial& m_) { return m_.exponents(); })
        .def_property_readonly("degree", &Monomial::degree)
        .def("__str__", [](const Monomial& m_) { return render_monomial(m_); })
        .def("__repr__",
             [](const Monomial& m_) {
                 return "Monomial('" + render_monomial(m_) + "')";
             })
        .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; });

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init(&make_ideal), py::arg("text"),
             py::arg("n") = std::nullopt)
        .def_property_readonly("n", &MonomialIdeal::vars)
        .def_property_readonly("gens",
                               [](const MonomialIdeal& I) {
                                   std::vector<std::string> out;
                                   for (const Monomial& g : I.gens())
                                       out.push_back(render_monomial(g));
                                   return out;
                               })
        .def_property_readonly("is_proper", &MonomialIdeal::is_proper)
        .def("to_json",
             [](const MonomialIdeal& I) { return json_to_py(ideal_to_json(I)); })
        .def("__str__", [](const MonomialIdeal& I) { return render_ideal(I); })
        .def("__repr__",
             [](const MonomialIdeal& I) {
                 return "MonomialIdeal('" + render_ideal(I) + "')";
             })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) {
            return a == b;
        });

    m.def("parse_ideal", &make_ideal, py::arg("text"),
          py::arg("n") = std::nullopt, "Parse the comma-separated monomial "
                                       "grammar into a minimalized ideal");
    m.def("parse_monomial", &parse_monomial, py::arg("text"),
          py::arg("n") = std::nullopt);
    m.def("is_artinian", &is_artinian);
    m.def("standard_monomials",
          [](const MonomialIdeal& I, Exponent degree) {
              std::vector<std::string> out;
              for (const Monomial& u : standard_monomials(I, degree))
                  out.push_back(render_monomial(u));
              return out;
          },
          py::arg("ideal"), py::arg("degree"));
    m.def("hilbert",
          [](const MonomialIdeal& I) {
              return json_to_py(hilbert_to_json(hilbert_data(I)));
          },
          py::arg("ideal"));
    m.def("check_wlp",
          [](const MonomialIdeal& I, int threads) {
              return json_to_py(report_to_json(
                  check_lefschetz(I, LefschetzProperty::weak, threads)));
          },
          py::arg("ideal"), py::arg("threads") = 0);
    m.def("check_slp",
          [](const MonomialIdeal& I, int threads) {
              return json_to_py(report_to_json(
                  check_lefschetz(I, LefschetzProperty::strong, threads)));
          },
          py::arg("ideal"), py::arg("threads") = 0);
    m.def("has_narrow_slp", &has_narrow_slp, py::arg("ideal"),
          py::arg("threads") = 0);
    m.def("split",
          [](const MonomialIdeal& K, const Monomial& mono) {
              Decomposition dec = split(K, mono);
              return py::make_tuple(dec.I, dec.J);
          },
          py::arg("ideal"), py::arg("m"),
          "Returns (K + (m), K : (m))");
    m.def("hilbert_compatible", &hilbert_compatible, py::arg("ideal"),
          py::arg("m"), py::arg("d"));
    m.def("centre_to_centre", &centre_to_centre, py::arg("ideal"),
          py::arg("m"));
    m.def("find_witness",
          [](const MonomialIdeal& K,
             std::optional<Exponent> d) -> py::object {
              auto dec = find_witness(K, d);
              if (!dec)
                  return py::none();
              return json_to_py(decomposition_to_json(*dec));
          },
          py::arg("ideal"), py::arg("d") = std::nullopt);
    m.def("can_glue", &can_glue, py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("glue",
          [](const MonomialIdeal& I, const MonomialIdeal& J,
             const Monomial& mono) { return glue(I, J, mono).K; },
          py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("glue_candidates",
          [](const MonomialIdeal& I, const MonomialIdeal& J) {
              std::vector<std::string> out;
              for (const Monomial& mono : glue_candidates(I, J))
                  out.push_back(render_monomial(mono));
              return out;
          },
          py::arg("i"), py::arg("j"));
    m.def("family_product_linear", &family_product_linear, py::arg("d"));
    m.def("family_squares_squared", &family_squares_squared, py::arg("n"));

    py::class_<Table>(m, "Table")
        .def(py::init(&make_table), py::arg("json"))
        .def("to_json",
             [](const Table& t) { return json_to_py(table_to_json(t)); });
    m.def("validate_table",
          [](const Table& t) {
              std::vector<std::string> out;
              for (const auto& v : validate(t))
                  out.push_back(v.message);
              return out;
          },
          py::arg("table"));
    m.def("table_ideal", &ideal_of, py::arg("table"));
    m.def("predicted_socle", &predicted_socle, py::arg("table"));
    m.def("lemma_ideal", &lemma31_ideal, py::arg("d"), py::arg("alpha"));

    m.def("gorenstein_certificate",
          [](const std::vector<Exponent>& d, const std::vector<Exponent>& alpha,
             const std::string& c, std::size_t cap, int threads) {
              Rational r(c);
              r.canonicalize();
              return json_to_py(certificate_to_json(
                  gorenstein_certificate(d, alpha, r, cap, threads)));
          },
          py::arg("d"), py::arg("alpha"), py::arg("c") = "1",
          py::arg("cap") = kDefaultDimensionCap, py::arg("threads") = 0);

    m.def("maci_ideal",
          [](Exponent a, Exponent b, Exponent c) {
              return maci_ideal(MaciParams(a, b, c));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("thm_slp_ideal", &thm51_ideal, py::arg("n"), py::arg("a"));
    m.def("predict_wlp",
          [](Exponent a, Exponent b, Exponent c) {
              return predict_wlp(MaciParams(a, b, c));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("predict_slp",
          [](Exponent d, Exponent e1, Exponent e2, Exponent e3) {
              return predict_slp(d, {e1, e2, e3});
          },
          py::arg("common_degree"), py::arg("e1"), py::arg("e2"),
          py::arg("e3"));
    m.def("twin_peak_values",
          [](Exponent a, Exponent b, Exponent c) {
              return twin_peak_values(MaciParams(a, b, c));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("maci_scan",
          [](const std::vector<Exponent>& d_values, bool slp, int threads) {
              ScanOptions options;
              options.slp = slp;
              options.threads = threads;
              py::list out;
              for (const ScanRow& row : scan(d_values, options).rows)
                  out.append(json_to_py(scan_row_to_json(row)));
              return out;
          },
          py::arg("d_values"), py::arg("slp") = false, py::arg("threads") = 0);

    m.def("selftest", [](int threads) {
        py::list out;
        for (const auto& r : run_selftest(threads))
            out.append(py::make_tuple(r.name, r.passed));
        return out;
    }, py::arg("threads") = 0);
}
