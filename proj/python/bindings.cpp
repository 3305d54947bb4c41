#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "hypfq/characters.hpp"
#include "hypfq/fields.hpp"
#include "hypfq/hypergeo.hpp"
#include "hypfq/padics.hpp"
#include "hypfq/rational.hpp"
#include "hypfq/varieties.hpp"
#include "hypfq/verify.hpp"

namespace py = pybind11;
using namespace hypfq;

namespace {

// Integers are read as elements of the prime field, strings use "c0,c1,..." syntax.
FqElem elem(const FieldCtx& f, const py::handle& x) {
    if (py::isinstance<py::str>(x)) return f.parse(x.cast<std::string>());
    if (py::isinstance<py::int_>(x)) return f.from_int(x.cast<std::int64_t>());
    throw py::type_error("field element must be an int or a string");
}

std::vector<Rational> rationals(const py::handle& x) {
    if (py::isinstance<py::str>(x)) return parse_rational_list(x.cast<std::string>());
    std::vector<Rational> out;
    for (auto item : x) {
        if (py::isinstance<py::int_>(item)) {
            out.emplace_back(item.cast<std::int64_t>());
        } else {
            auto v = parse_rational_list(py::str(item).cast<std::string>());
            if (v.size() != 1) throw std::invalid_argument("expected a single fraction");
            out.push_back(v.front());
        }
    }
    return out;
}

py::dict gn(std::uint32_t p, int r, const py::object& top, const py::object& bottom, const py::object& t,
            std::optional<int> precision) {
    auto f = make_field(p, r);
    GParams params{rationals(top), rationals(bottom)};
    params.validate(p);
    const FqElem x = elem(*f, t);
    const int M = precision.value_or(default_precision(p, r));
    auto ctx = CharacterCtx::make(f, M);
    const PadicRationalZq v = GnEvaluator(*ctx, params, M)(x);
    const double b = f->q() + 1 + 2 * std::sqrt(static_cast<double>(f->q()));
    const auto bound = static_cast<std::int64_t>(std::ceil(b * b));
    py::dict out;
    out["params"] = params.str();
    out["t"] = x.str();
    out["precision"] = M;
    out["value"] = v.str();
    out["valuation"] = v.is_zero() ? py::none() : py::cast(v.valuation());
    const auto n = v.to_integer(-bound, bound);
    out["integer"] = n ? py::cast(*n) : py::none();
    return out;
}

}  // namespace

PYBIND11_MODULE(_hypfq, m) {
    m.doc() = "Finite-field hypergeometric functions";

    py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
        .def(py::init([](std::uint32_t p, int r) { return std::const_pointer_cast<FieldCtx>(make_field(p, r)); }),
             py::arg("p"), py::arg("r") = 1)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("r", &FieldCtx::r)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def_property_readonly("generator", [](const FieldCtx& f) { return f.generator().str(); })
        .def("elements", [](const FieldCtx& f) {
            std::vector<std::string> out;
            for (const auto& x : f.elements()) out.push_back(x.str());
            return out;
        })
        .def("dlog", [](const FieldCtx& f, const py::object& x) { return dlog(elem(f, x)); })
        .def("trace", [](const FieldCtx& f, const py::object& x) { return trace(elem(f, x)); })
        .def("legendre", [](const FieldCtx& f, const py::object& x) { return legendre(elem(f, x)); })
        .def("__repr__", &FieldCtx::name);

    m.def("gn", &gn, py::arg("p"), py::arg("r"), py::arg("top"), py::arg("bottom"), py::arg("t"),
          py::arg("precision") = py::none(), "Evaluate nGn[top; bottom | t] over F_{p^r}.");

    m.def("default_precision", &default_precision, py::arg("p"), py::arg("r") = 1);

    m.def(
        "complex_gauss_sum",
        [](std::uint32_t p, int r, std::uint32_t a) { return complex_gauss_sum(*make_field(p, r), a); },
        py::arg("p"), py::arg("r"), py::arg("a"));

    m.def(
        "count_dsurface",
        [](std::uint32_t p, int r, int d, int k, const py::object& lam, bool affine) {
            auto f = make_field(p, r);
            DiagonalSurfaceParams dp{d, k, elem(*f, lam)};
            return affine ? count_affine_N(dp) : count_projective_D(dp);
        },
        py::arg("p"), py::arg("r"), py::arg("d"), py::arg("k"), py::arg("lam"), py::arg("affine") = false);

    m.def(
        "ec_count",
        [](std::uint32_t p, int r, const py::object& a2, const py::object& a4, const py::object& a6,
           bool allow_singular) {
            auto f = make_field(p, r);
            const EcCount c = ec_count({elem(*f, a2), elem(*f, a4), elem(*f, a6)}, allow_singular);
            return py::make_tuple(c.points, c.a_q);
        },
        py::arg("p"), py::arg("r"), py::arg("a2"), py::arg("a4"), py::arg("a6"), py::arg("allow_singular") = false,
        "Return (points, a_q) for y^2 = x^3 + a2 x^2 + a4 x + a6.");

    m.def(
        "hessian_count",
        [](std::uint32_t p, int r, const py::object& a, bool projective) {
            auto f = make_field(p, r);
            const FqElem x = elem(*f, a);
            return projective ? hessian_count_projective(x) : hessian_count(x);
        },
        py::arg("p"), py::arg("r"), py::arg("a"), py::arg("projective") = false);

    m.def("check_ids", &check_ids);

    m.def(
        "verify_report",
        [](const std::vector<std::string>& suites, std::uint32_t pmax, int rmax, int dmax,
           const std::vector<std::pair<std::uint32_t, int>>& fields, int precision, int threads,
           const std::string& format) {
            SuiteConfig cfg;
            cfg.suites = suites;
            cfg.pmax = pmax;
            cfg.rmax = rmax;
            cfg.dmax = dmax;
            cfg.fields = fields;
            cfg.precision = precision;
            cfg.threads = threads;
            Report rep;
            {
                py::gil_scoped_release release;
                rep = run_suite(cfg);
            }
            if (format == "json") return to_json(rep);
            if (format == "csv") return to_csv(rep);
            if (format == "plain") return to_plain(rep);
            throw std::invalid_argument("format must be json, csv or plain");
        },
        py::arg("suites"), py::arg("pmax"), py::arg("rmax"), py::arg("dmax"), py::arg("fields"), py::arg("precision"),
        py::arg("threads"), py::arg("format"));
}
