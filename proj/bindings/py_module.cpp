// Python bindings for the MBM-class library. Exact rationals cross the
// boundary as fractions.Fraction; big integers as Python ints.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbmcone/curves.hpp"
#include "mbmcone/mukai.hpp"
#include "mbmcone/serialize.hpp"
#include "mbmcone/walls.hpp"

namespace py = pybind11;
using namespace mbmcone;

namespace {

py::object to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const mpq_class& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(q.get_num()), to_pyint(q.get_den()));
}

Family make_family(const std::string& kind, long long n) {
    return Family(family_kind_from_string(kind), n);
}

std::optional<mpq_class> parse_bound(const py::object& bound) {
    if (bound.is_none())
        return std::nullopt;
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object as_fraction = fraction(bound);
    const std::string num = py::str(as_fraction.attr("numerator"));
    const std::string den = py::str(as_fraction.attr("denominator"));
    return make_rat(mpz_class(num), mpz_class(den));
}

ScanWindow make_window(long long bound, const py::object& lo, const py::object& hi) {
    return ScanWindow{parse_bound(lo), parse_bound(hi), bound};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Mbm: return "MBM";
        case Verdict::NotMbm: return "NotMBM";
        default: return "NonNegativeSquare";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact enumeration and classification of MBM classes for K3^[n]- "
              "and Kummer-type holomorphic symplectic manifolds";

    py::class_<Family>(m, "Family")
        .def(py::init(&make_family), py::arg("kind"), py::arg("n"))
        .def_property_readonly("kind", [](const Family& f) { return to_string(f.kind); })
        .def_readonly("n", &Family::n)
        .def_property_readonly("t", &Family::t)
        .def(py::self == py::self)
        .def("__repr__", [](const Family& f) {
            return "Family('" + to_string(f.kind) + "', " + std::to_string(f.n) + ")";
        });

    py::class_<PicClass>(m, "PicClass")
        .def(py::init([](long long f, long long c, long long d, const Family& fam) {
                 return PicClass{f, c, d, fam};
             }),
             py::arg("f"), py::arg("c"), py::arg("d"), py::arg("family"))
        .def_readonly("f", &PicClass::f)
        .def_readonly("c", &PicClass::c)
        .def_readonly("d", &PicClass::d)
        .def_readonly("family", &PicClass::family)
        .def(py::self == py::self)
        .def("__repr__", [](const PicClass& a) {
            return "PicClass(f=" + std::to_string(a.f) + ", c=" + std::to_string(a.c) +
                   ", d=" + std::to_string(a.d) + ")";
        });

    py::class_<DualClass>(m, "DualClass")
        .def_property_readonly("x", [](const DualClass& a) { return to_fraction(a.f_hat); })
        .def_property_readonly("e", [](const DualClass& a) { return to_fraction(a.c_hat); })
        .def_property_readonly("square",
                               [](const DualClass& a) { return to_fraction(bb_square(a)); });

    py::class_<OrbitDescriptor>(m, "OrbitDescriptor")
        .def_readonly("a", &OrbitDescriptor::a)
        .def_readonly("b", &OrbitDescriptor::b)
        .def_property_readonly("q_hat",
                               [](const OrbitDescriptor& o) { return to_fraction(o.q_hat); })
        .def_readonly("delta_abs", &OrbitDescriptor::delta_abs)
        .def_readonly("canonical_rep", &OrbitDescriptor::canonical_rep)
        .def("__repr__", [](const OrbitDescriptor& o) {
            return "OrbitDescriptor(a=" + std::to_string(o.a) + ", b=" + std::to_string(o.b) +
                   ")";
        });

    py::class_<NormalizedClass>(m, "NormalizedClass")
        .def_readonly("r", &NormalizedClass::r)
        .def_readonly("b_norm", &NormalizedClass::b_norm)
        .def_property_readonly("q_x",
                               [](const NormalizedClass& n) { return to_pyint(n.q_x); })
        .def_readonly("family", &NormalizedClass::family);

    py::class_<Classification>(m, "Classification")
        .def_property_readonly("verdict",
                               [](const Classification& c) { return verdict_name(c.verdict); })
        .def_readonly("orbit", &Classification::orbit)
        .def_readonly("reason", &Classification::reason)
        .def_property_readonly("normalized", [](const Classification& c) {
            return c.trace ? std::optional<NormalizedClass>(c.trace->normalized) : std::nullopt;
        });

    py::class_<CurveRealization>(m, "CurveRealization")
        .def_readonly("genus", &CurveRealization::genus)
        .def_readonly("k", &CurveRealization::k)
        .def_readonly("homology_class", &CurveRealization::homology_class)
        .def_readonly("locus_dim", &CurveRealization::locus_dim)
        .def_readonly("fiber_dim", &CurveRealization::fiber_dim)
        .def_readonly("exceptional_fiber", &CurveRealization::exceptional_fiber);

    py::class_<WallRay>(m, "WallRay")
        .def_readonly("p", &WallRay::p)
        .def_readonly("q", &WallRay::q)
        .def_property_readonly("slope", [](const WallRay& w) { return to_fraction(w.slope); })
        .def_readonly("source", &WallRay::source)
        .def_readonly("orbit", &WallRay::orbit)
        .def("__repr__", [](const WallRay& w) {
            return "WallRay(" + std::to_string(w.p) + ", " + std::to_string(w.q) + ")";
        });

    py::class_<ChamberReport>(m, "ChamberReport")
        .def_readonly("lower", &ChamberReport::lower)
        .def_readonly("upper", &ChamberReport::upper)
        .def_readonly("coeff_bound", &ChamberReport::coeff_bound);

    m.def("bb_square",
          [](const PicClass& a) { return to_pyint(bb_square(a)); },
          "Beauville-Bogomolov square 2d*f^2 - t*c^2");
    m.def("bb_pairing",
          [](const PicClass& a, const PicClass& b) { return to_pyint(bb_pairing(a, b)); });
    m.def("is_primitive", &is_primitive);
    m.def("divisibility", &divisibility);
    m.def("delta", [](const PicClass& a) { return delta(a).value; },
          "discriminant-group image of a/d(a), as a residue in [0, t)");
    m.def("delta_rep", [](const PicClass& a) { return signed_rep(delta(a)); },
          "signed representative of the discriminant image, in [0, t/2]");
    m.def("dual_class", &dual_class);

    m.def("orbit_params_valid", &orbit_params_valid, py::arg("family"), py::arg("a"),
          py::arg("b"));
    m.def("enumerate_mbm_orbits", &enumerate_mbm_orbits);
    m.def("canonical_representative", &canonical_representative);
    m.def("normalize", &normalize);
    m.def("classify", &classify);
    m.def("same_orbit", &same_orbit);

    m.def("realize_orbit", &realize_orbit);
    m.def("genus_bound", &genus_bound);
    m.def("extremal_qhat",
          [](const Family& fam) { return to_fraction(extremal_qhat(fam)); });

    m.def("wall_predicate",
          [](const Family& fam, long long u, long long kappa_sq, long long s) {
              return wall_predicate(AbstractMukaiVector{u, kappa_sq, s, fam});
          },
          py::arg("family"), py::arg("u"), py::arg("kappa_sq"), py::arg("s"));
    m.def("wall_to_orbit",
          [](const Family& fam, long long u, long long kappa_sq, long long s) {
              return wall_to_orbit(AbstractMukaiVector{u, kappa_sq, s, fam});
          },
          py::arg("family"), py::arg("u"), py::arg("kappa_sq"), py::arg("s"));
    m.def("orbit_to_wall",
          [](const Family& fam, long long a, long long b, long long u) {
              const AbstractMukaiVector w = orbit_to_wall(fam, a, b, u);
              return std::make_tuple(w.u, w.kappa_sq, w.s);
          },
          py::arg("family"), py::arg("a"), py::arg("b"), py::arg("u"));
    m.def("scan_wall_orbits",
          [](const Family& fam, long long u_bound, long long s_bound, long long kappa_bound) {
              return scan_wall_orbits(fam, MukaiScanBounds{u_bound, s_bound, kappa_bound});
          },
          py::arg("family"), py::arg("u_bound"), py::arg("s_bound"), py::arg("kappa_bound"));

    m.def("scan_walls",
          [](const Family& fam, long long d, long long bound, const py::object& lo,
             const py::object& hi) { return scan_walls(fam, d, make_window(bound, lo, hi)); },
          py::arg("family"), py::arg("d"), py::arg("bound"), py::arg("slope_lo") = py::none(),
          py::arg("slope_hi") = py::none());
    m.def("chamber_of",
          [](const Family& fam, long long d, const PicClass& probe, long long bound,
             const py::object& lo, const py::object& hi) {
              return chamber_of(fam, d, probe, make_window(bound, lo, hi));
          },
          py::arg("family"), py::arg("d"), py::arg("probe"), py::arg("bound"),
          py::arg("slope_lo") = py::none(), py::arg("slope_hi") = py::none());

    m.def("enumerate_json", [](const Family& fam) {
        return dump_record(make_record("enumerate", fam, enumerate_payload(fam)));
    });
}
