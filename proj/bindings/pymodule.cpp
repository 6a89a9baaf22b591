#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhcf/border_strip.hpp"
#include "qhcf/continued_fraction.hpp"
#include "qhcf/higher_cf.hpp"
#include "qhcf/network.hpp"
#include "qhcf/positivity.hpp"
#include "qhcf/qnum.hpp"
#include "qhcf/stabilization.hpp"
#include "qhcf/transfer_matrix.hpp"

namespace py = pybind11;
using namespace qhcf;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt to_big(py::int_ v) { return BigInt(py::str(v).cast<std::string>()); }

py::object to_fraction(const BigRational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(numerator(v)), to_py(denominator(v)));
}

py::list coeff_list(const std::vector<BigInt>& coeffs) {
    py::list out;
    for (const auto& c : coeffs) out.append(to_py(c));
    return out;
}

ContinuedFraction cf(const std::vector<int>& terms) { return ContinuedFraction(terms); }

OmegaVariant variant_of(const std::string& name) {
    if (name == "plain") return OmegaVariant::Plain;
    if (name == "bar") return OmegaVariant::Bar;
    throw py::value_error("variant must be 'plain' or 'bar'");
}

py::tuple ratfunc_tuple(const RatFunc& f) { return py::make_tuple(f.num(), f.den()); }

}  // namespace

PYBIND11_MODULE(qhcf, m) {
    m.doc() = "exact computations with q-deformed higher continued fractions";

    py::class_<LaurentPoly>(m, "Poly")
        .def(py::init([](py::list coeffs, int min_degree) {
                 std::vector<BigInt> c;
                 for (auto item : coeffs) c.push_back(to_big(py::cast<py::int_>(item)));
                 return LaurentPoly::from_coeffs(min_degree, std::move(c));
             }),
             py::arg("coeffs"), py::arg("min_degree") = 0)
        .def_property_readonly("min_degree", &LaurentPoly::min_degree)
        .def_property_readonly("max_degree", &LaurentPoly::max_degree)
        .def_property_readonly("coeffs", [](const LaurentPoly& p) { return coeff_list(p.coeffs()); })
        .def("coeff", [](const LaurentPoly& p, int k) { return to_py(p.coeff(k)); })
        .def("eval_one", [](const LaurentPoly& p) { return to_py(p.eval_one()); })
        .def("subst_q_inverse", &LaurentPoly::subst_q_inverse)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly& p) { return "Poly(" + p.to_string() + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self);

    m.def("qint", &qint, py::arg("n"));
    m.def("qbinom", &qbinom, py::arg("n"), py::arg("k"));
    m.def("qmultichoose", &qmultichoose, py::arg("a"), py::arg("k"));

    m.def(
        "cf_expand",
        [](py::int_ r, py::int_ s) {
            return ContinuedFraction::from_rational(to_big(r), to_big(s)).terms();
        },
        py::arg("r"), py::arg("s"), "continued fraction terms of r/s (r/s >= 1)");
    m.def(
        "cf_value",
        [](const std::vector<int>& terms) { return to_fraction(cf(terms).value()); },
        py::arg("terms"));

    m.def(
        "strip_cells",
        [](const std::vector<int>& terms) { return BorderStrip(cf(terms)).cells(); },
        py::arg("terms"), "cells of the border strip, bottom-left to top-right");
    m.def(
        "strip_ascii",
        [](const std::vector<int>& terms) { return BorderStrip(cf(terms)).ascii(); },
        py::arg("terms"));
    m.def(
        "ppartitions",
        [](const std::vector<int>& terms, int m) {
            return enumerate_ppartitions(BorderStrip(cf(terms)), m);
        },
        py::arg("terms"), py::arg("m"));
    m.def(
        "omega",
        [](const std::vector<int>& terms, int m, int i, int j, const std::string& variant) {
            return omega_gf(BorderStrip(cf(terms)), m, i, j, variant_of(variant));
        },
        py::arg("terms"), py::arg("m"), py::arg("i") = 1, py::arg("j") = 1,
        py::arg("variant") = "plain");

    m.def(
        "product_matrix",
        [](const std::vector<int>& terms, int m) {
            PolyMatrix x = product_x(cf(terms), m);
            py::list rows;
            for (int i = 1; i <= x.dim(); ++i) {
                py::list row;
                for (int j = 1; j <= x.dim(); ++j) row.append(x.entry(i, j));
                rows.append(row);
            }
            return rows;
        },
        py::arg("terms"), py::arg("m"), "the alternating transfer-matrix product");

    m.def(
        "hcf_q1",
        [](py::int_ r, py::int_ s, int m) {
            auto values = hcf_q1_vector(ContinuedFraction::from_rational(to_big(r), to_big(s)), m);
            py::list out;
            for (const auto& v : values) out.append(to_fraction(v));
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("m"),
        "the rational vector (r_mm, ..., r_0m) of r/s");
    m.def(
        "hcf_q",
        [](py::int_ r, py::int_ s, int i, int m, const std::string& route) {
            ContinuedFraction c = ContinuedFraction::from_rational(to_big(r), to_big(s));
            if (route == "matrix") return ratfunc_tuple(hcf_q_matrix(c, i, m));
            if (route == "recursive") return ratfunc_tuple(hcf_q_recursive(c, i, m));
            throw py::value_error("route must be 'matrix' or 'recursive'");
        },
        py::arg("r"), py::arg("s"), py::arg("i"), py::arg("m"), py::arg("route") = "matrix",
        "(numerator, denominator) of the q-deformed value");
    m.def(
        "mgo",
        [](py::int_ r, py::int_ s) {
            return ratfunc_tuple(
                mgo_qrational(ContinuedFraction::from_rational(to_big(r), to_big(s))));
        },
        py::arg("r"), py::arg("s"), "(numerator, denominator) of the m=1 q-rational");

    m.def(
        "expand_series",
        [](const std::vector<int>& terms, int i, int m, int order) {
            return coeff_list(expand_hcf(cf(terms), i, m, order).coeffs);
        },
        py::arg("terms"), py::arg("i"), py::arg("m"), py::arg("order"));
    m.def(
        "stable_series",
        [](const std::vector<int>& prefix, const std::vector<int>& periodic, int i, int m,
           int order) {
            return coeff_list(stable_series(IrrationalCF(prefix, periodic), i, m, order).coeffs);
        },
        py::arg("prefix"), py::arg("periodic"), py::arg("i"), py::arg("m"), py::arg("order"),
        "stabilized series of the infinite fraction prefix + repeating tail");
    m.def(
        "agreement_degree",
        [](const std::vector<int>& a, const std::vector<int>& b, int i, int m, int cap) {
            return agreement_degree(cf(a), cf(b), i, m, cap);
        },
        py::arg("a"), py::arg("b"), py::arg("i"), py::arg("m"), py::arg("cap") = 64);

    m.def(
        "positivity_difference",
        [](py::int_ r, py::int_ s, py::int_ a, py::int_ b, int i, int m) {
            return positivity_difference(to_big(r), to_big(s), to_big(a), to_big(b), i, m);
        },
        py::arg("r"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("i"), py::arg("m"));
    m.def(
        "complement_pairs",
        [](py::int_ r, py::int_ s, py::int_ a, py::int_ b, int i, int m) {
            PositivityProblem prob(to_big(r), to_big(s), to_big(a), to_big(b), i, m);
            py::list out;
            for (const auto& p : prob.complement_pairs())
                out.append(py::make_tuple(p.left.labels, p.right.labels));
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("i"), py::arg("m"));

    m.def(
        "network_dot",
        [](const std::vector<int>& terms, int m) {
            return Network::from_terms(cf(terms), m).to_dot();
        },
        py::arg("terms"), py::arg("m"));
}
