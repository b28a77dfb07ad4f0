#include "mbmcone/walls.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbmcone {

static void validate_window(const ScanWindow& window) {
    if (window.coeff_bound < 1)
        throw std::invalid_argument("scan window requires coeff_bound >= 1");
    if (window.slope_lo && window.slope_hi && !(*window.slope_lo < *window.slope_hi))
        throw std::invalid_argument("scan window is empty (slope_lo >= slope_hi)");
}

// Orthogonal ray of a negative-square source (f, c): proportional to
// (t*c, 2d*f), made primitive and oriented so that its pairing with x is
// positive (2d*p > 0). Returns nothing when the ray misses the positive
// cone, which is every ray when d <= 0.
static std::optional<WallRay> wall_of_source(const PicClass& source,
                                             const OrbitDescriptor& orbit) {
    const long long t = source.family.t();
    mpz_class p = to_mpz(t) * to_mpz(source.c);
    mpz_class q = 2 * to_mpz(source.d) * to_mpz(source.f);
    const mpz_class g = gcd_z(p, q);
    if (g == 0)
        return std::nullopt;
    p /= g;
    q /= g;
    if (to_mpz(source.d) * p < 0) {
        p = -p;
        q = -q;
    }
    const PicClass ray_class{to_ll(p), to_ll(q), source.d, source.family};
    if (bb_square(ray_class) <= 0)
        return std::nullopt;
    return WallRay{ray_class.f, ray_class.c, make_rat(to_mpz(ray_class.c), to_mpz(ray_class.f)),
                   source, orbit};
}

std::vector<WallRay> scan_walls(const Family& family, long long d, const ScanWindow& window) {
    validate_window(window);
    const long long bound = window.coeff_bound;
    std::vector<WallRay> walls;

    // One representative per +-pair: f >= 1 with any c, plus (0, 1).
    auto consider = [&](long long f, long long c) {
        const PicClass source{f, c, d, family};
        if (!is_primitive(source) || bb_square(source) >= 0)
            return;
        const Classification cls = classify(source);
        if (cls.verdict != Verdict::Mbm)
            return;
        auto ray = wall_of_source(source, *cls.orbit);
        if (!ray)
            return;
        if (window.slope_lo && ray->slope < *window.slope_lo)
            return;
        if (window.slope_hi && ray->slope > *window.slope_hi)
            return;
        walls.push_back(std::move(*ray));
    };

    consider(0, 1);
    for (long long f = 1; f <= bound; ++f)
        for (long long c = -bound; c <= bound; ++c)
            consider(f, c);

    std::sort(walls.begin(), walls.end(),
              [](const WallRay& a, const WallRay& b) { return a.slope < b.slope; });
    return walls;
}

ChamberReport chamber_of(const Family& family, long long d, const PicClass& probe,
                         const ScanWindow& window) {
    if (d <= 0)
        throw std::invalid_argument("chamber queries require d > 0 (no positive classes otherwise)");
    if (probe.d != d || probe.family != family)
        throw std::invalid_argument("probe does not live in the scanned lattice");
    if (bb_square(probe) <= 0)
        throw std::invalid_argument("probe must have positive square");
    if (probe.f <= 0)
        throw std::invalid_argument("probe lies outside the positive component oriented by x");

    const mpq_class probe_slope = make_rat(probe.c, probe.f);
    ChamberReport report{std::nullopt, std::nullopt, window.coeff_bound};
    for (const WallRay& wall : scan_walls(family, d, window)) {
        if (wall.slope < probe_slope)
            report.lower = wall;  // sorted ascending: the last one below wins
        else if (!report.upper)
            report.upper = wall;  // first at-or-above; a probe on a wall sees it here
    }
    return report;
}

}  // namespace mbmcone
