#include "rootlat/expr.hpp"
#include "rootlat/report.hpp"

#include <cmath>
#include <limits>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

namespace py = pybind11;
using namespace rootlat;

namespace {

py::object json_to_py(const ordered_json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::dict kronecker_to_dict(const KroneckerClass& kc) {
    py::dict d;
    switch (kc.kind) {
        case KroneckerClass::Kind::RootOfUnity: d["kind"] = "RootOfUnity"; break;
        case KroneckerClass::Kind::TwoCosPiRational: d["kind"] = "TwoCosPiRational"; break;
        case KroneckerClass::Kind::SmallSet: d["kind"] = "SmallSet"; break;
        case KroneckerClass::Kind::None: d["kind"] = "None"; break;
    }
    if (kc.kind == KroneckerClass::Kind::RootOfUnity) d["order"] = kc.order;
    if (kc.has_two_cos) {
        d["k"] = kc.k;
        d["m"] = kc.m;
    }
    if (kc.small_set) {
        using SV = KroneckerClass::SmallValue;
        switch (*kc.small_set) {
            case SV::Zero: d["small_set"] = "0"; break;
            case SV::PlusOne: d["small_set"] = "+1"; break;
            case SV::MinusOne: d["small_set"] = "-1"; break;
            case SV::PlusSqrt2: d["small_set"] = "+sqrt2"; break;
            case SV::MinusSqrt2: d["small_set"] = "-sqrt2"; break;
        }
    }
    return d;
}

std::pair<double, double> eval_pair(const CycElem& a, long bits) {
    RealInterval iv = eval_real(a, Rat(1) / rat_of(1LL << bits));
    // keep the enclosure valid after the lossy conversion: doubles round outward
    double lo = iv.lo.get_d();
    while (Rat(lo) > iv.lo) lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    double hi = iv.hi.get_d();
    while (Rat(hi) < iv.hi) hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    return {lo, hi};
}

std::vector<std::vector<CycElem>> roots_of_type(const std::string& name) {
    CoxeterType t = CoxeterType::parse(name);
    return enumerate_roots(gram_of_type(t), default_cap(t));
}

}  // namespace

PYBIND11_MODULE(_rootlat, m) {
    m.doc() = "Exact classification of root lattices over totally real abelian fields";

    py::register_exception<Error>(m, "Error");

    py::class_<CycElem>(m, "CycElem")
        .def(py::init([](const std::string& text) { return parse_cyc_expr(text); }),
             py::arg("expression"))
        .def(py::init<long>())
        .def_property_readonly("modulus", &CycElem::modulus)
        .def("coeffs",
             [](const CycElem& a) {
                 std::vector<std::string> out;
                 for (const Rat& c : a.coeffs()) out.push_back(rat_to_string(c));
                 return out;
             })
        .def("is_zero", &CycElem::is_zero)
        .def("is_rational", &CycElem::is_rational)
        .def("is_real", [](const CycElem& a) { return is_real(a); })
        .def("is_algebraic_integer",
             [](const CycElem& a) { return is_algebraic_integer(a); })
        .def("sign", [](const CycElem& a) { return sign_of(a); })
        .def("eval", &eval_pair, py::arg("bits") = 53,
             "Certified enclosure (lo, hi) of width at most 2^-bits")
        .def("galois", [](const CycElem& a, i64 u) { return galois(a, u); },
             py::arg("u"))
        .def("conjugates", [](const CycElem& a) { return galois_orbit(a); })
        .def("minimal_polynomial",
             [](const CycElem& a) {
                 std::vector<std::string> out;
                 for (const Rat& c : minimal_polynomial(a)) out.push_back(rat_to_string(c));
                 return out;
             })
        .def("kronecker",
             [](const CycElem& a) { return kronecker_to_dict(kronecker_classify(a)); })
        .def("canonicalized", [](const CycElem& a) { return canonicalize(a); })
        .def("__add__", [](const CycElem& a, const CycElem& b) { return a + b; })
        .def("__sub__", [](const CycElem& a, const CycElem& b) { return a - b; })
        .def("__mul__", [](const CycElem& a, const CycElem& b) { return a * b; })
        .def("__truediv__", [](const CycElem& a, const CycElem& b) { return a / b; })
        .def("__neg__", [](const CycElem& a) { return -a; })
        .def("__eq__", [](const CycElem& a, const CycElem& b) { return a == b; })
        .def("__repr__", [](const CycElem& a) { return to_string(a); })
        .def("__str__", [](const CycElem& a) { return to_string(a); });

    py::class_<FieldDescriptor>(m, "Field")
        .def(py::init([](const std::vector<i64>& gens) {
                 return FieldDescriptor::make(gens);
             }),
             py::arg("gens"))
        .def_property_readonly("gens", &FieldDescriptor::gens)
        .def_property_readonly("modulus", &FieldDescriptor::modulus)
        .def_property_readonly("degree", &FieldDescriptor::degree)
        .def("contains_zeta_plus", &FieldDescriptor::contains_zeta_plus, py::arg("n"))
        .def("contains_element", &FieldDescriptor::contains_element, py::arg("a"))
        .def("subfield_of", &FieldDescriptor::subfield_of, py::arg("other"))
        .def("__repr__", &FieldDescriptor::to_json_string);

    m.def("parse", &parse_cyc_expr, py::arg("expression"));
    m.def("zeta", &CycElem::zeta, py::arg("n"));
    m.def("zeta_power", &CycElem::zeta_power, py::arg("n"), py::arg("k"));
    m.def("zeta_plus", &make_zeta_plus, py::arg("m"),
          "zeta_m + zeta_m^-1 = 2cos(2*pi/m)");
    m.def("cyclotomic_unit", &cyclotomic_unit_c, py::arg("m"), py::arg("k"));
    m.def("chebyshev_q", [](i64 k) {
        py::object to_int = py::module_::import("builtins").attr("int");
        py::list out;
        for (const Int& c : chebyshev_q(k)) out.append(to_int(c.get_str()));
        return out;
    });

    m.def("qk", [](const std::vector<i64>& gens) {
        return json_to_py(qk_to_json(compute_qk(FieldDescriptor::make(gens))));
    });
    m.def("classify", [](const std::vector<i64>& gens, i64 nmax) {
        return json_to_py(build_report(FieldDescriptor::make(gens), nmax));
    }, py::arg("gens"), py::arg("nmax") = 8);
    m.def("extend", [](const std::vector<i64>& g1, const std::vector<i64>& g2) {
        return json_to_py(extend_report(FieldDescriptor::make(g1),
                                        FieldDescriptor::make(g2)));
    });
    m.def("rank2_roots", [](const std::vector<i64>& gens, i64 n) {
        return rank2_roots(FieldDescriptor::make(gens), n);
    });
    m.def("roots_of_type", &roots_of_type, py::arg("type"));
    m.def("root_count", [](const std::string& name) {
        return static_cast<i64>(roots_of_type(name).size());
    });
    m.def("gram_of_type", [](const std::string& name) {
        GramMatrix g = gram_of_type(CoxeterType::parse(name));
        std::vector<std::vector<CycElem>> rows;
        for (i64 i = 0; i < g.size; ++i) {
            std::vector<CycElem> row;
            for (i64 j = 0; j < g.size; ++j) row.push_back(g.at(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    });
    m.def("qk_dot", [](const std::vector<i64>& gens) {
        return to_dot(compute_qk(FieldDescriptor::make(gens)));
    });
}
