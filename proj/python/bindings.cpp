// Pybind11 bindings for the fibtel core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibtel/lucas.hpp"
#include "fibtel/oracle.hpp"
#include "fibtel/series.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const fibtel::BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_py_fraction(const fibtel::BigRat& value) {
    return py::module_::import("fractions")
        .attr("Fraction")(value.num().str() + "/" + value.den().str());
}

fibtel::SeriesSpec spec_from_args(const std::string& name, std::optional<std::uint64_t> m,
                                  std::optional<std::uint64_t> a,
                                  std::optional<std::uint64_t> p) {
    return fibtel::make_series(name, m, a, p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fibonacci/Lucas telescoping series: fast doubling, identity "
              "sweeps, and certified summation in Q(sqrt(5)).";

    py::class_<fibtel::QuadRat>(m, "QuadRat")
        .def(py::init([](std::int64_t a, std::int64_t b, std::int64_t d) {
                 return fibtel::QuadRat(a, b, d);
             }),
             py::arg("a"), py::arg("b"), py::arg("d") = 1)
        .def_property_readonly("a", [](const fibtel::QuadRat& q) { return to_py_int(q.a()); })
        .def_property_readonly("b", [](const fibtel::QuadRat& q) { return to_py_int(q.b()); })
        .def_property_readonly("d", [](const fibtel::QuadRat& q) { return to_py_int(q.d()); })
        .def("sign", &fibtel::QuadRat::sign)
        .def("is_rational", &fibtel::QuadRat::is_rational)
        .def("to_decimal", &fibtel::QuadRat::to_decimal, py::arg("digits"))
        .def("__add__", [](const fibtel::QuadRat& x, const fibtel::QuadRat& y) { return x + y; })
        .def("__sub__", [](const fibtel::QuadRat& x, const fibtel::QuadRat& y) { return x - y; })
        .def("__mul__", [](const fibtel::QuadRat& x, const fibtel::QuadRat& y) { return x * y; })
        .def("__truediv__",
             [](const fibtel::QuadRat& x, const fibtel::QuadRat& y) { return x / y; })
        .def("__eq__", [](const fibtel::QuadRat& x, const fibtel::QuadRat& y) { return x == y; })
        .def("__str__", &fibtel::QuadRat::to_string)
        .def("__repr__",
             [](const fibtel::QuadRat& q) { return "QuadRat" + q.to_string(); });

    py::class_<fibtel::SeriesSpec>(m, "SeriesSpec")
        .def_property_readonly("name", &fibtel::SeriesSpec::name)
        .def_property_readonly("start_index", &fibtel::SeriesSpec::start_index)
        .def("__repr__", [](const fibtel::SeriesSpec& s) { return "SeriesSpec(" + s.name() + ")"; });

    py::class_<fibtel::ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("terms_used", &fibtel::ConvergenceReport::terms_used)
        .def_readonly("certified", &fibtel::ConvergenceReport::certified)
        .def_readonly("diagnostic", &fibtel::ConvergenceReport::diagnostic)
        .def_readonly("decimal_digits_agreeing",
                      &fibtel::ConvergenceReport::decimal_digits_agreeing)
        .def_property_readonly(
            "partial", [](const fibtel::ConvergenceReport& r) { return to_py_fraction(r.partial); })
        .def_property_readonly(
            "gap_bound",
            [](const fibtel::ConvergenceReport& r) { return to_py_fraction(r.gap_bound); })
        .def_property_readonly("target",
                               [](const fibtel::ConvergenceReport& r) { return r.target; })
        .def("__repr__", [](const fibtel::ConvergenceReport& r) {
            return "ConvergenceReport(" + r.spec.name() +
                   ", terms_used=" + std::to_string(r.terms_used) +
                   ", certified=" + (r.certified ? std::string("True") : std::string("False")) + ")";
        });

    py::class_<fibtel::IdentityCheck>(m, "IdentityCheck")
        .def_readonly("holds", &fibtel::IdentityCheck::holds)
        .def_readonly("lhs", &fibtel::IdentityCheck::lhs)
        .def_readonly("rhs", &fibtel::IdentityCheck::rhs);

    py::class_<fibtel::FuzzFailure>(m, "FuzzFailure")
        .def_readonly("params", &fibtel::FuzzFailure::params)
        .def_readonly("lhs", &fibtel::FuzzFailure::lhs)
        .def_readonly("rhs", &fibtel::FuzzFailure::rhs);

    py::class_<fibtel::FuzzReport>(m, "FuzzReport")
        .def_readonly("identity", &fibtel::FuzzReport::identity)
        .def_readonly("grid", &fibtel::FuzzReport::grid)
        .def_readonly("cases", &fibtel::FuzzReport::cases)
        .def_readonly("failures", &fibtel::FuzzReport::failures)
        .def("passed", &fibtel::FuzzReport::pass);

    m.def("fib", [](std::uint64_t n) { return to_py_int(fibtel::fib(n)); }, py::arg("n"));
    m.def("lucas", [](std::uint64_t n) { return to_py_int(fibtel::lucas(n)); }, py::arg("n"));
    m.def("alpha_pow", &fibtel::alpha_pow, py::arg("n"));
    m.def("binet_roundtrip", [](std::uint64_t n) {
        const auto [f, l] = fibtel::binet_roundtrip(n);
        return py::make_tuple(to_py_fraction(f), to_py_fraction(l));
    });

    m.def("index_bound", &fibtel::index_bound);
    m.def("set_index_bound", &fibtel::set_index_bound, py::arg("bound"));

    m.def("make_series", &spec_from_args, py::arg("name"), py::arg("m") = std::nullopt,
          py::arg("a") = std::nullopt, py::arg("p") = std::nullopt);
    m.def("direct_term", [](const fibtel::SeriesSpec& s, std::uint64_t n) {
        return to_py_fraction(fibtel::direct_term(s, n));
    });
    m.def("b_value", [](const fibtel::SeriesSpec& s, std::uint64_t n) {
        return to_py_fraction(fibtel::b_value(s, n));
    });
    m.def(
        "partial_sum",
        [](const fibtel::SeriesSpec& s, std::uint64_t terms, const std::string& mode) {
            if (mode != "direct" && mode != "telescoped") {
                throw py::value_error("mode must be 'direct' or 'telescoped'");
            }
            return to_py_fraction(fibtel::partial_sum(
                s, terms, mode == "direct" ? fibtel::SumMode::direct : fibtel::SumMode::telescoped));
        },
        py::arg("spec"), py::arg("terms"), py::arg("mode") = "direct");
    m.def("closed_form", &fibtel::closed_form, py::arg("spec"));
    m.def("certify", &fibtel::certify, py::arg("spec"), py::arg("digits"));
    m.def("decimal_crosscheck", &fibtel::decimal_crosscheck, py::arg("spec"), py::arg("digits"));

    m.def("lemma1_eval", &fibtel::lemma1_eval);
    m.def("lemma2_eval", &fibtel::lemma2_eval);
    m.def("lemma7_eval", &fibtel::lemma7_eval);
    m.def("lemma8_eval", &fibtel::lemma8_eval);
    m.def("fuzz_lemma", [](int lemma) { return fibtel::fuzz_lemma(lemma); }, py::arg("lemma"));
    m.def("fuzz_ratio", []() { return fibtel::fuzz_ratio(); });
    m.def("fuzz_lemma6_kfree", []() { return fibtel::fuzz_lemma6_kfree(); });

    m.def("generic_apery_check",
          [](const std::string& x_num, const std::string& x_den,
             const std::vector<std::pair<std::string, std::string>>& a, std::size_t n) {
              std::vector<fibtel::BigRat> terms;
              terms.reserve(a.size());
              for (const auto& [num, den] : a) {
                  terms.emplace_back(fibtel::BigInt(num), fibtel::BigInt(den));
              }
              return fibtel::generic_apery_check(
                  fibtel::BigRat(fibtel::BigInt(x_num), fibtel::BigInt(x_den)), terms, n);
          });
}
