#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "qi/cli/cli.hpp"
#include "qi/cli/json_io.hpp"
#include "qi/errors.hpp"
#include "qi/generic.hpp"
#include "qi/hn.hpp"
#include "qi/monoid.hpp"
#include "qi/oracle/oracle.hpp"
#include "qi/roots.hpp"
#include "qi/series.hpp"

namespace py = pybind11;
using namespace qi;

namespace {

using Dim = std::map<std::string, int>;

DimVector to_dim(const Quiver& q, const Dim& d) {
    std::vector<int> v(q.vertex_count(), 0);
    for (const auto& [name, x] : d) {
        auto i = q.index_of(name);
        if (!i) throw InputError("unknown vertex '" + name + "'");
        v[*i] = x;
    }
    return DimVector(v);
}

Dim from_dim(const Quiver& q, const DimVector& d) {
    Dim out;
    for (std::size_t i = 0; i < d.size(); ++i) out[q.name(i)] = d[i];
    return out;
}

Stability to_theta(const Quiver& q, const std::map<std::string, long>& t) {
    std::vector<long> v(q.vertex_count(), 0);
    for (const auto& [name, x] : t) {
        auto i = q.index_of(name);
        if (!i) throw InputError("unknown vertex '" + name + "'");
        v[*i] = x;
    }
    return Stability(v);
}

// Coefficients of degrees 0..high as Python ints.
py::list coeffs(const LaurentPoly& p) {
    py::list out;
    if (p.is_zero()) return out;
    if (p.low_degree() < 0) throw InternalError("negative exponent in a polynomial in q");
    for (int e = 0; e <= p.high_degree(); ++e) out.append(py::int_(py::str(p.coefficient(e).get_str())));
    return out;
}

py::object fraction(const Rational& r) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

}  // namespace

PYBIND11_MODULE(_quiverinv, m) {
    m.doc() = "Invariants of quiver representations and their moduli spaces";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<ArithmeticError>(m, "DomainError", PyExc_ArithmeticError);

    py::class_<Quiver>(m, "Quiver")
        .def(py::init<std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&>(), py::arg("vertices"), py::arg("arrows"))
        .def_static("kronecker", &Quiver::kronecker)
        .def_static("linear", &Quiver::linear)
        .def_static("from_json", [](const std::string& text) { return json_io::quiver_from_json(json_io::parse(text, "quiver")); })
        .def_property_readonly("vertices", &Quiver::vertex_names)
        .def("to_json", [](const Quiver& q) { return json_io::to_json(q).dump(); })
        .def("__repr__", [](const Quiver& q) { return "Quiver(" + json_io::to_json(q).dump() + ")"; });

    m.def("euler_form", [](const Quiver& q, const Dim& d, const Dim& e) { return euler_form(q, to_dim(q, d), to_dim(q, e)); });

    m.def("classify_root", [](const Quiver& q, const Dim& d) {
        auto r = classify_root(q, to_dim(q, d));
        std::vector<std::string> w;
        for (auto i : r.witness) w.push_back(q.name(i));
        return py::make_tuple(std::string(to_string(r.kind)), w);
    });

    m.def("ext", [](const Quiver& q, const Dim& d, const Dim& e) { return GenericCalculus(q).ext(to_dim(q, d), to_dim(q, e)); });
    m.def("hom", [](const Quiver& q, const Dim& d, const Dim& e) { return GenericCalculus(q).hom(to_dim(q, d), to_dim(q, e)); });
    m.def("is_schur", [](const Quiver& q, const Dim& d) { return GenericCalculus(q).schur(to_dim(q, d)); });
    m.def("decomposition", [](const Quiver& q, const Dim& d) {
        std::vector<Dim> out;
        for (const auto& p : GenericCalculus(q).decomposition(to_dim(q, d))) out.push_back(from_dim(q, p));
        return out;
    });

    m.def("ss_nonempty", [](const Quiver& q, const std::map<std::string, long>& th, const Dim& d) { return HNCalculus(q, to_theta(q, th)).ss_nonempty(to_dim(q, d)); });
    m.def("hn_types", [](const Quiver& q, const std::map<std::string, long>& th, const Dim& d) {
        py::list out;
        for (const auto& t : HNCalculus(q, to_theta(q, th)).hn_types(to_dim(q, d))) {
            std::vector<Dim> parts;
            for (const auto& p : t.parts) parts.push_back(from_dim(q, p));
            out.append(py::make_tuple(parts, t.codim));
        }
        return out;
    });
    m.def(
        "mass_ss",
        [](const Quiver& q, const std::map<std::string, long>& th, const Dim& d, const std::string& method, py::object at) -> py::object {
            HNCalculus hn(q, to_theta(q, th));
            const RationalFunc f = method == "closed" ? hn.mass_ss_closed(to_dim(q, d)) : hn.mass_ss(to_dim(q, d));
            if (at.is_none()) return py::str(f.to_string("q"));
            return fraction(f.evaluate(Rational(at.cast<long>())));
        },
        py::arg("quiver"), py::arg("theta"), py::arg("dim"), py::arg("method") = "closed", py::arg("at") = py::none(),
        "|R_d^ss| / |G_d| as a string in q, or its value at q = at.");
    m.def(
        "betti",
        [](const Quiver& q, const std::map<std::string, long>& th, const Dim& d, const std::string& method) {
            HNCalculus hn(q, to_theta(q, th));
            const DimVector dd = to_dim(q, d);
            if (method == "closed") return coeffs(hn.poincare(dd).contract_power(2));
            if (method == "mass") return coeffs(hn.betti_via_mass(dd));
            throw InputError("method must be closed or mass");
        },
        py::arg("quiver"), py::arg("theta"), py::arg("dim"), py::arg("method") = "closed");

    m.def("word_leq", [](const Quiver& q, const std::string& w, const std::string& w2) { return word_leq(q, parse_word(q, w), parse_word(q, w2)); });
    m.def(
        "monoid_equal",
        [](const Quiver& q, const std::string& w, const std::string& w2, std::uint64_t budget) {
            return std::string(to_string(monoid_equal(q, parse_word(q, w), parse_word(q, w2), budget).outcome));
        },
        py::arg("quiver"), py::arg("w"), py::arg("w2"), py::arg("budget") = kDefaultWordBudget);

    m.def(
        "count_semistable",
        [](const Quiver& q, const std::map<std::string, long>& th, const Dim& d, int p, std::uint64_t budget) {
            return oracle::count_semistable(q, to_theta(q, th), to_dim(q, d), p, budget).count;
        },
        py::arg("quiver"), py::arg("theta"), py::arg("dim"), py::arg("q"), py::arg("budget") = oracle::kDefaultBudget);
    m.def(
        "min_ext",
        [](const Quiver& q, const Dim& d, const Dim& e, int p) { return oracle::min_ext(q, to_dim(q, d), to_dim(q, e), p).value; },
        py::arg("quiver"), py::arg("d"), py::arg("e"), py::arg("q"));

    m.def("two_row_series", [](int n) {
        py::list out;
        const auto s = two_row_partition_series(n);
        for (const auto& c : s.coefficients()) out.append(py::int_(py::str(c.get_str())));
        return out;
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs one command line; returns (exit code, stdout, stderr).");
}
