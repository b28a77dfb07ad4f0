#include "mbmcone/curves.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mbmcone {

static void check(bool ok, const std::string& what, const OrbitDescriptor& o) {
    if (!ok)
        throw std::logic_error("curve realization of orbit (" + std::to_string(o.a) + ", " +
                               std::to_string(o.b) + ") violates " + what);
}

CurveRealization realize_orbit(const Family& family, const OrbitDescriptor& orbit) {
    if (!orbit_params_valid(family, orbit.a, orbit.b))
        throw std::invalid_argument("realize_orbit: invalid orbit");

    const long long n = family.n;
    const long long t = family.t();
    const PicClass& rep = orbit.canonical_rep;
    const long long r = std::gcd(rep.f, t);
    const long long b_norm = -rep.c;
    DualClass homology{make_rat(1, 1), make_rat(-b_norm, r), rep.d, family};

    if (orbit.a == 0 && orbit.b == 1) {
        // Exceptional orbit: the fibre of the exceptional divisor, a rational
        // curve with no source pencil. The divisor has dimension 2n - 1 and
        // is generically a P^1-bundle, so (genus, k) = (0, 1).
        return CurveRealization{0, 1, homology, 2 * n - 1, 1, true};
    }

    const long long g = orbit.a + 1;
    const long long k = b_norm * (t / r) - g + 1;  // = b - a

    const long long k_max = family.kind == FamilyKind::K3 ? n : n + 1;
    check(k >= 1 && k <= k_max, "the pencil degree range", orbit);
    if (family.kind == FamilyKind::Kummer)
        check(k >= 2, "the degree-2 lower bound for pencils on a torus curve", orbit);
    check(k > 2 * g - 2, "k > 2g - 2", orbit);
    // Gonality of a genus-g curve is at most floor((g+3)/2); the pencil must
    // reach it. The g = 0 and g = 1 cases reduce to k >= 1 and k >= 2.
    check((g + 1) / 2 + 1 <= k, "the gonality bound", orbit);

    return CurveRealization{g, k, homology, 2 * n - k + g, k - g, false};
}

long long genus_bound(const Family& family) {
    const long long m = family.kind == FamilyKind::K3 ? family.n + 3 : family.n + 5;
    return (m + 3) / 4 - 1;  // ceil(m/4) - 1
}

mpq_class extremal_qhat(const Family& family) {
    const long long m = family.kind == FamilyKind::K3 ? family.n + 3 : family.n + 1;
    return make_rat(-m, 2);
}

}  // namespace mbmcone
