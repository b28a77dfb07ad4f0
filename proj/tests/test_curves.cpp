#include <numeric>

#include "doctest.h"
#include "mbmcone/curves.hpp"

using namespace mbmcone;

namespace {
const Family k3_2(FamilyKind::K3, 2);
const Family kum_2(FamilyKind::Kummer, 2);
}  // namespace

TEST_CASE("realizations of worked examples") {
    // K3, n = 2, orbit (-1, 1): a rational source curve with a degree-2
    // pencil; k = n is the extremal case.
    const auto r1 = realize_orbit(k3_2, make_orbit_descriptor(k3_2, -1, 1));
    CHECK(r1.genus == 0);
    CHECK(r1.k == 2);
    CHECK(r1.locus_dim == 2);
    CHECK(r1.fiber_dim == 2);
    CHECK(!r1.exceptional_fiber);
    CHECK(r1.homology_class.f_hat == 1);
    CHECK(r1.homology_class.c_hat == make_rat(-1, 2));
    CHECK(bb_square(r1.homology_class) == make_rat(-5, 2));

    // Any K3 family, orbit (-1, n-1): the line in Sym^n of a rational curve.
    for (long long n : {3, 7, 20}) {
        const Family fam(FamilyKind::K3, n);
        const auto r = realize_orbit(fam, make_orbit_descriptor(fam, -1, n - 1));
        CHECK(r.genus == 0);
        CHECK(r.k == n);
    }

    // Kummer, n = 2, orbit (0, 3): elliptic source, k = n + 1, class C - 3*e/t.
    const auto r2 = realize_orbit(kum_2, make_orbit_descriptor(kum_2, 0, 3));
    CHECK(r2.genus == 1);
    CHECK(r2.k == 3);
    CHECK(r2.homology_class.c_hat == make_rat(-3, 6));
    CHECK(bb_square(r2.homology_class) == make_rat(-3, 2));

    CHECK_THROWS_AS(realize_orbit(k3_2, make_orbit_descriptor(kum_2, 0, 3)),
                    std::invalid_argument);
}

TEST_CASE("the exceptional orbit is the fibre of the exceptional divisor") {
    for (const Family& fam : {k3_2, kum_2, Family(FamilyKind::K3, 9)}) {
        const auto r = realize_orbit(fam, make_orbit_descriptor(fam, 0, 1));
        CHECK(r.exceptional_fiber);
        CHECK(r.genus == 0);
        CHECK(r.k == 1);
        CHECK(r.locus_dim == 2 * fam.n - 1);
        CHECK(r.fiber_dim == 1);
        CHECK(bb_square(r.homology_class) == make_rat(-1, fam.t()));
    }
}

TEST_CASE("genus bounds") {
    CHECK(genus_bound(k3_2) == 1);
    CHECK(genus_bound(Family(FamilyKind::K3, 13)) == 3);
    CHECK(genus_bound(Family(FamilyKind::Kummer, 3)) == 1);
}

TEST_CASE("extremal dual squares") {
    CHECK(extremal_qhat(k3_2) == make_rat(-5, 2));
    CHECK(extremal_qhat(kum_2) == make_rat(-3, 2));
    CHECK(extremal_qhat(Family(FamilyKind::K3, 3)) == -3);
}

TEST_CASE("feasibility chain holds for every orbit, n <= 20") {
    for (long long n = 2; n <= 20; ++n)
        for (FamilyKind kind : {FamilyKind::K3, FamilyKind::Kummer}) {
            const Family fam(kind, n);
            const long long t = fam.t();
            const long long k_max = kind == FamilyKind::K3 ? n : n + 1;
            for (const auto& orbit : enumerate_mbm_orbits(fam)) {
                const auto r = realize_orbit(fam, orbit);
                CHECK(r.genus >= 0);
                CHECK(r.genus <= genus_bound(fam));
                CHECK(r.k >= 1);
                CHECK(r.k <= k_max);
                CHECK(r.k > 2 * r.genus - 2);
                CHECK((r.genus + 1) / 2 + 1 <= r.k);
                CHECK(r.fiber_dim == 2 * n - r.locus_dim);
                CHECK(bb_square(r.homology_class) == orbit.q_hat);
                if (!r.exceptional_fiber) {
                    const long long rr = std::gcd(orbit.canonical_rep.f, t);
                    CHECK(r.k == -orbit.canonical_rep.c * (t / rr) - r.genus + 1);
                    CHECK(r.k == orbit.b - orbit.a);
                }
            }
        }
}

TEST_CASE("the extremal orbit is realized by the extremal pencil, n <= 50") {
    for (long long n = 2; n <= 50; ++n)
        for (FamilyKind kind : {FamilyKind::K3, FamilyKind::Kummer}) {
            const Family fam(kind, n);
            mpq_class min_q = 0;
            OrbitDescriptor extremal = make_orbit_descriptor(fam, 0, 1);
            for (const auto& orbit : enumerate_mbm_orbits(fam))
                if (orbit.q_hat < min_q) {
                    min_q = orbit.q_hat;
                    extremal = orbit;
                }
            CHECK(min_q == extremal_qhat(fam));
            const auto r = realize_orbit(fam, extremal);
            if (kind == FamilyKind::K3) {
                CHECK(r.genus == 0);
                CHECK(r.k == n);
            } else {
                CHECK(r.genus == 1);
                CHECK(r.k == n + 1);
            }
        }
}
