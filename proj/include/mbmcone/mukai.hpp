#pragma once

#include <optional>
#include <set>
#include <utility>

#include "mbmcone/family.hpp"

namespace mbmcone {

/// Mukai vector (u, kappa, s) abstracted to the three numbers every pairing
/// of the wall description depends on: the rank u, the self-intersection
/// kappa_sq of the NS-component, and the degree component s. The moduli
/// vector is v = (1, 0, 1-n) for K3 and (1, 0, -1-n) for Kummer, with
/// v^2 = t in both families; the exceptional vector is e = (1, 0, n-+1).
/// Mukai pairings:  a^2 = kappa_sq - 2us,  (v,a) = tu/2 - s,
/// (a,e) = -s - tu/2.
struct AbstractMukaiVector {
    long long u;
    long long kappa_sq;  // even
    long long s;
    Family family;
};

/// Mukai self-pairing kappa_sq - 2us.
long long mukai_self_pairing(const AbstractMukaiVector& a);

/// Pairing (v, a) = tu/2 - s against the moduli vector.
long long mukai_v_pairing(const AbstractMukaiVector& a);

/// Wall membership: K3 requires a^2 >= -2 and 0 <= (v,a) <= v^2/2;
/// Kummer requires a^2 >= 0 and 0 < (v,a) <= v^2/2.
bool wall_predicate(const AbstractMukaiVector& a);

/// Projects a wall vector to orbit parameters (a^2/2, (v,a)). Returns empty
/// when the projected class has non-negative square: its orthogonal
/// hyperplane misses the positive cone and cuts no wall. A non-empty result
/// always satisfies orbit_params_valid. Rejects non-wall input.
std::optional<std::pair<long long, long long>> wall_to_orbit(const AbstractMukaiVector& a);

/// Lifts an orbit to the wall vector (u, 2a + 2u(tu/2 - b), tu/2 - b) of the
/// chosen rank u. wall_to_orbit inverts it for every u.
AbstractMukaiVector orbit_to_wall(const Family& family, long long a_param, long long b_param,
                                  long long u);

struct MukaiScanBounds {
    long long u_bound;      // |u| <= u_bound
    long long s_bound;      // |s| <= s_bound
    long long kappa_bound;  // kappa_sq even, |kappa_sq| <= kappa_bound
};

/// Orbit parameters reached by wall_to_orbit over the whole bounded box of
/// abstract Mukai vectors. With bounds of at least (0, t/2, 2) around each
/// orbit this is exactly the enumerated orbit set.
std::set<std::pair<long long, long long>> scan_wall_orbits(const Family& family,
                                                           const MukaiScanBounds& bounds);

}  // namespace mbmcone
