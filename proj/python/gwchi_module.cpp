// Python bindings for the main operations: chi of a variety expression,
// the generating series, the verification suites, and the symmetric-power
// invariants. Arbitrary-precision values cross into python as exact ints
// via their decimal rendering.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwchi/error.hpp"
#include "gwchi/hilbert.hpp"
#include "gwchi/k0var.hpp"
#include "gwchi/power.hpp"
#include "gwchi/symmetric.hpp"

namespace py = pybind11;
using namespace gwchi;

namespace {

py::object py_int(const Int& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::dict gw_dict(const GwElement& q) {
    py::dict d;
    d["str"] = q.str();
    d["rank"] = py_int(q.rank());
    const auto sig = q.signature_opt();
    d["signature"] = sig ? py_int(*sig) : py::object(py::none());
    py::list terms;
    for (const auto& [cls, mult] : q.terms()) {
        py::dict term;
        term["cls"] = cls.str();
        term["mult"] = py_int(mult);
        terms.append(term);
    }
    d["terms"] = terms;
    d["discriminant"] = q.discriminant().str();
    return d;
}

py::list series_list(const GwSeries& s) {
    py::list coeffs;
    for (unsigned n = 0; n <= s.order(); ++n) coeffs.append(gw_dict(s.coeff(n)));
    return coeffs;
}

py::list int_series_list(const IntSeries& s) {
    py::list coeffs;
    for (unsigned n = 0; n <= s.order(); ++n) coeffs.append(py_int(s.coeff(n)));
    return coeffs;
}

py::dict chi_py(const std::string& expr, const std::string& field_flag) {
    const auto field = FieldModel::from_flag(field_flag);
    const auto value = eval_chi(parse_variety(expr), field);
    py::dict d = gw_dict(value);
    d["expr"] = parse_variety(expr)->render();
    d["field"] = field_flag;
    return d;
}

py::list local_hilb_py(unsigned order, const std::string& field_flag) {
    return series_list(local_hilb_series_gw(FieldModel::from_flag(field_flag), order));
}

py::dict gottsche_py(std::int64_t e_complex, std::int64_t e_real, unsigned order,
                     const std::string& field_flag) {
    const auto field = FieldModel::from_flag(field_flag);
    const SurfaceInvariants inv{e_complex, e_real};
    const auto via_sym = gottsche_via_sym(inv, field, order);
    const auto via_power = gottsche_via_power(inv, field, order);
    py::dict d;
    d["coeffs"] = series_list(via_sym);
    d["routes_agree"] = via_sym == via_power;
    return d;
}

py::dict yau_zaslow_py(std::int64_t e_real, unsigned order) {
    const auto ref = yau_zaslow_reference(e_real, order);
    py::dict d;
    d["rank"] = int_series_list(ref.rank);
    d["sign"] = int_series_list(ref.sign);
    return d;
}

py::list verify_axioms_py(const std::string& ring, const std::string& field_flag,
                          unsigned trials, unsigned order, std::uint64_t seed) {
    std::vector<AxiomReport> reports;
    if (ring == "z") {
        reports = axiom_suite<IntRing>(int_seed(), sample_int, trials, order, seed);
    } else if (ring == "gw") {
        const auto field = FieldModel::from_flag(field_flag);
        reports = axiom_suite<GwRing>(
            gw_seed(field), [field](Rng& rng) { return sample_gw(field, rng); }, trials, order, seed);
    } else {
        throw error("verify_axioms: ring must be 'z' or 'gw'");
    }
    py::list out;
    for (const auto& r : reports) {
        py::dict d;
        d["axiom"] = r.axiom;
        d["trials"] = r.trials;
        d["failures"] = r.failures;
        d["first_counterexample"] =
            r.first_counterexample ? py::object(py::str(*r.first_counterexample))
                                   : py::object(py::none());
        out.append(d);
    }
    return out;
}

py::tuple sym_invariants_py(std::int64_t r, std::int64_t s, unsigned n) {
    const auto inv = sym_invariants(Int(r), Int(s), n);
    return py::make_tuple(py_int(inv.rank), py_int(inv.signature));
}

py::list verify_conjecture_py(const std::string& field_flag, unsigned sym_n) {
    py::list out;
    for (const auto& report : conjecture_checks(FieldModel::from_flag(field_flag), sym_n)) {
        py::dict d;
        d["check"] = report.check;
        d["pass"] = report.pass;
        d["detail"] = report.detail;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(gwchi, m) {
    m.doc() = "Exact Grothendieck-Witt Euler-characteristic toolkit";

    m.def("chi", &chi_py, py::arg("expr"), py::arg("field") = "rclosed",
          "Compactly supported chi of a variety expression, as a dict with "
          "exact rank, signature (None over unordered fields), square-class "
          "terms, and discriminant.");
    m.def("local_hilb_series", &local_hilb_py, py::arg("order") = 10,
          py::arg("field") = "rclosed",
          "Coefficients of the local punctual Hilbert-scheme series.");
    m.def("gottsche", &gottsche_py, py::arg("e_complex"), py::arg("e_real"),
          py::arg("order") = 10, py::arg("field") = "rclosed",
          "Hilbert-scheme series of a surface from the symmetric-power "
          "route, with a routes_agree flag against the power-structure route.");
    m.def("yau_zaslow", &yau_zaslow_py, py::arg("e_real"), py::arg("order") = 10,
          "Classical K3 reference series: rank and sign coefficient lists.");
    m.def("verify_axioms", &verify_axioms_py, py::arg("ring") = "z",
          py::arg("field") = "rclosed", py::arg("trials") = 200,
          py::arg("order") = 10, py::arg("seed") = 1729,
          "Run the power-structure axiom suite; one report per axiom.");
    m.def("verify_conjecture", &verify_conjecture_py, py::arg("field") = "rclosed",
          py::arg("sym_n") = 6,
          "Check that symmetric powers of the kernel classes stay in the kernel.");
    m.def("sym_invariants", &sym_invariants_py, py::arg("r"), py::arg("s"), py::arg("n"),
          "Rank and signature of the n-th symmetric power of a class with "
          "rank r and signature s.");

    py::register_exception<gwchi::error>(m, "GwchiError");
}
