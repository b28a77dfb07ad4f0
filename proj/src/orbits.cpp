#include "mbmcone/orbits.hpp"

#include <numeric>
#include <stdexcept>

namespace mbmcone {

bool orbit_params_valid(const Family& family, long long a, long long b) {
    const long long t = family.t();
    if (family.kind == FamilyKind::K3) {
        if (b < 0 || b > family.n - 1)
            return false;
        if (2 * a < -2)
            return false;
    } else {
        if (b < 1 || b > family.n + 1)
            return false;
        if (a < 0)
            return false;
    }
    // 2a < b^2/t, cross-multiplied; a and b are bounded by t here.
    return 2 * a * t < b * b;
}

PicClass canonical_representative(const Family& family, long long a, long long b) {
    if (!orbit_params_valid(family, a, b))
        throw std::invalid_argument("invalid orbit parameters (a, b) = (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    const long long t = family.t();
    const long long g = std::gcd(b, t);  // b = 0 gives g = t, hence the class z itself
    return PicClass{t / g, -b / g, a, family};
}

OrbitDescriptor make_orbit_descriptor(const Family& family, long long a, long long b) {
    const long long t = family.t();
    return OrbitDescriptor{a, b, make_rat(2 * a * t - b * b, t), b,
                           canonical_representative(family, a, b)};
}

std::vector<OrbitDescriptor> enumerate_mbm_orbits(const Family& family) {
    const long long t = family.t();
    const long long b_lo = family.kind == FamilyKind::K3 ? 0 : 1;
    const long long b_hi = family.kind == FamilyKind::K3 ? family.n - 1 : family.n + 1;
    const long long a_lo = family.kind == FamilyKind::K3 ? -1 : 0;
    std::vector<OrbitDescriptor> orbits;
    for (long long b = b_lo; b <= b_hi; ++b)
        for (long long a = a_lo; 2 * a * t < b * b; ++a)  // b = 0 admits only a = -1
            orbits.push_back(make_orbit_descriptor(family, a, b));
    return orbits;
}

NormalizationTrace normalize_traced(const PicClass& alpha) {
    if (!is_primitive(alpha))
        throw std::invalid_argument("normalize requires a primitive class");
    if (bb_square(alpha) >= 0)
        throw std::invalid_argument("normalize requires a class of negative square");

    const long long t = alpha.family.t();
    const long long r = std::gcd(alpha.f, t);  // gcd(0, t) = t covers alpha = +-e
    const long long m = alpha.f / r;
    const long long s = t / r;

    // Centered remainder of c mod r in [-r/2, r/2], ties broken toward +r/2.
    long long rem = alpha.c % r;
    if (rem < 0)
        rem += r;
    const long long b_prime = 2 * rem > r ? rem - r : rem;
    const long long l = (alpha.c - b_prime) / r;

    // Shift identity: q(x) = q(y') + t*l^2 - 2*c*l*s with q(y') = 2d*m^2.
    const mpz_class q_y = 2 * to_mpz(alpha.d) * to_mpz(m) * to_mpz(m);
    const mpz_class q_x =
        q_y + to_mpz(t) * to_mpz(l) * to_mpz(l) - 2 * to_mpz(alpha.c) * to_mpz(l) * to_mpz(s);

    return NormalizationTrace{
        NormalizedClass{r, b_prime < 0 ? -b_prime : b_prime, q_x, alpha.family}, l};
}

NormalizedClass normalize(const PicClass& alpha) { return normalize_traced(alpha).normalized; }

Classification classify(const PicClass& alpha) {
    if (!is_primitive(alpha))
        throw std::invalid_argument("classify requires a primitive class");
    if (bb_square(alpha) >= 0)
        return Classification{Verdict::NonNegativeSquare, std::nullopt, std::nullopt, ""};

    NormalizationTrace trace = normalize_traced(alpha);
    const NormalizedClass& nc = trace.normalized;
    const Family& fam = alpha.family;

    if (fam.kind == FamilyKind::Kummer && nc.b_norm == 0)
        return Classification{Verdict::NotMbm, std::nullopt, trace, "torus class, never MBM"};

    const mpz_class threshold = fam.kind == FamilyKind::K3 ? mpz_class(-2) : mpz_class(0);
    if (nc.q_x < threshold)
        return Classification{Verdict::NotMbm, std::nullopt, trace,
                              "normalized square q(x) = " + nc.q_x.get_str() +
                                  " below the family threshold"};

    const long long a = to_ll(nc.q_x / 2);  // q_x is even and small once MBM
    const long long b = nc.b_norm * (fam.t() / nc.r);
    return Classification{Verdict::Mbm, make_orbit_descriptor(fam, a, b), trace, ""};
}

bool same_orbit(const PicClass& a, const PicClass& b) {
    if (a.family != b.family)
        throw std::invalid_argument("same_orbit: family mismatch");
    if (!is_primitive(a) || !is_primitive(b))
        throw std::invalid_argument("same_orbit requires primitive classes");
    return bb_square(a) == bb_square(b) && signed_rep(delta(a)) == signed_rep(delta(b));
}

}  // namespace mbmcone
