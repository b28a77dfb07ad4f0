#include "mbmcone/mukai.hpp"

#include <limits>
#include <stdexcept>

#include "mbmcone/orbits.hpp"

namespace mbmcone {

using int128 = __int128;

static long long narrow(int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::invalid_argument(std::string("Mukai vector component overflow in ") + what);
    return static_cast<long long>(v);
}

long long mukai_self_pairing(const AbstractMukaiVector& a) {
    return narrow(int128(a.kappa_sq) - int128(2) * a.u * a.s, "self pairing");
}

long long mukai_v_pairing(const AbstractMukaiVector& a) {
    return narrow(int128(a.family.t()) * a.u / 2 - a.s, "v pairing");
}

bool wall_predicate(const AbstractMukaiVector& a) {
    const int128 self = int128(a.kappa_sq) - int128(2) * a.u * a.s;
    const int128 va = int128(a.family.t()) * a.u / 2 - a.s;
    const int128 half_v_sq = a.family.t() / 2;
    if (a.family.kind == FamilyKind::K3)
        return self >= -2 && va >= 0 && va <= half_v_sq;
    return self >= 0 && va > 0 && va <= half_v_sq;
}

std::optional<std::pair<long long, long long>> wall_to_orbit(const AbstractMukaiVector& a) {
    if (!wall_predicate(a))
        throw std::invalid_argument("wall_to_orbit requires a vector satisfying the wall predicate");
    const int128 self = int128(a.kappa_sq) - int128(2) * a.u * a.s;
    const int128 b = int128(a.family.t()) * a.u / 2 - a.s;  // in [0, t/2]
    // Empty when the projection has non-negative square: 2a >= b^2/t.
    if (self * a.family.t() >= b * b)
        return std::nullopt;
    return std::make_pair(narrow(self / 2, "orbit parameter a"), static_cast<long long>(b));
}

AbstractMukaiVector orbit_to_wall(const Family& family, long long a_param, long long b_param,
                                  long long u) {
    if (!orbit_params_valid(family, a_param, b_param))
        throw std::invalid_argument("orbit_to_wall: invalid orbit parameters");
    const int128 s = int128(family.t()) * u / 2 - b_param;
    const int128 kappa_sq = int128(2) * a_param + int128(2) * u * s;
    return AbstractMukaiVector{u, narrow(kappa_sq, "kappa_sq"), narrow(s, "s"), family};
}

std::set<std::pair<long long, long long>> scan_wall_orbits(const Family& family,
                                                           const MukaiScanBounds& bounds) {
    if (bounds.u_bound < 0 || bounds.s_bound < 0 || bounds.kappa_bound < 0)
        throw std::invalid_argument("scan bounds must be non-negative");
    std::set<std::pair<long long, long long>> orbits;
    for (long long u = -bounds.u_bound; u <= bounds.u_bound; ++u)
        for (long long s = -bounds.s_bound; s <= bounds.s_bound; ++s) {
            // (v,a) depends on (u, s) only; skip the kappa loop when it is
            // already out of range.
            const int128 va = int128(family.t()) * u / 2 - s;
            const long long lo = family.kind == FamilyKind::K3 ? 0 : 1;
            if (va < lo || va > family.t() / 2)
                continue;
            const long long kappa_lo = -(bounds.kappa_bound / 2) * 2;
            for (long long kappa_sq = kappa_lo; kappa_sq <= bounds.kappa_bound; kappa_sq += 2) {
                const AbstractMukaiVector a{u, kappa_sq, s, family};
                if (!wall_predicate(a))
                    continue;
                if (auto orbit = wall_to_orbit(a))
                    orbits.insert(*orbit);
            }
        }
    return orbits;
}

}  // namespace mbmcone
