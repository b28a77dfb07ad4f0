#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbmcone/lattice.hpp"

namespace mbmcone {

/// Monodromy orbit of an MBM class, keyed by the integer pair (a, b):
/// q(dual) = 2a - b^2/t with b = |delta| in the discriminant group. The two
/// invariants (q, +-delta) separate orbits, so descriptors are compared
/// through (q_hat, delta_abs).
struct OrbitDescriptor {
    long long a;
    long long b;
    mpq_class q_hat;      // 2a - b^2/t, exact
    long long delta_abs;  // = b, in [0, t/2]
    PicClass canonical_rep;
};

/// Monodromy normal form r*x - b_norm*e of a primitive negative class:
/// r = gcd(f, t) divides t, b_norm in [0, r/2], q(x) = q_x. The theorem-level
/// invariant b equals b_norm * (t/r); the two are related but distinct.
struct NormalizedClass {
    long long r;
    long long b_norm;
    mpz_class q_x;  // even
    Family family;
};

/// Normal form together with the integer shift l that was applied to the
/// e-coefficient (c - l*r = +-b_norm).
struct NormalizationTrace {
    NormalizedClass normalized;
    long long shift;
};

enum class Verdict { Mbm, NotMbm, NonNegativeSquare };

struct Classification {
    Verdict verdict;
    std::optional<OrbitDescriptor> orbit;       // present iff Mbm
    std::optional<NormalizationTrace> trace;    // present iff the square is negative
    std::string reason;                         // present iff NotMbm
};

/// Membership test for the orbit grid: K3 requires b in [0, n-1] and
/// -2 <= 2a < b^2/t; Kummer requires b in [1, n+1] and 0 <= 2a < b^2/t.
bool orbit_params_valid(const Family& family, long long a, long long b);

/// All monodromy orbits of MBM classes, sorted by (b, a). Pairwise distinct
/// in (q_hat, delta_abs); the K3 orbit b = 0 (forcing a = -1) appears once.
std::vector<OrbitDescriptor> enumerate_mbm_orbits(const Family& family);

/// The distinguished representative (t/g)*z - (b/g)*e with g = gcd(b, t) and
/// q(z) = 2a. Rejects invalid (a, b).
PicClass canonical_representative(const Family& family, long long a, long long b);

OrbitDescriptor make_orbit_descriptor(const Family& family, long long a, long long b);

/// Monodromy normal form of a primitive class of negative square. Preserves
/// bb_square exactly and delta up to sign. A Kummer result with b_norm = 0
/// indicates a torus class (never MBM); classify() reports it as such.
NormalizedClass normalize(const PicClass& a);
NormalizationTrace normalize_traced(const PicClass& a);

/// Full MBM decision: NonNegativeSquare when q >= 0, otherwise MBM iff the
/// normalized q_x clears the family threshold (-2 for K3, 0 for Kummer).
Classification classify(const PicClass& a);

/// Orbit equality through the complete invariants q and +-delta.
bool same_orbit(const PicClass& a, const PicClass& b);

}  // namespace mbmcone
