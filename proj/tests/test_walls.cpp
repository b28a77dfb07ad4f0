#include <set>

#include "doctest.h"
#include "mbmcone/walls.hpp"

using namespace mbmcone;

namespace {

const Family k3_2(FamilyKind::K3, 2);
const Family kum_2(FamilyKind::Kummer, 2);

ScanWindow full(long long bound) { return ScanWindow{std::nullopt, std::nullopt, bound}; }

std::set<std::pair<long long, long long>> source_set(const std::vector<WallRay>& walls) {
    std::set<std::pair<long long, long long>> out;
    for (const auto& w : walls)
        out.emplace(w.source.f, w.source.c);
    return out;
}

}  // namespace

TEST_CASE("scan of the K3 n=2, d=1 lattice") {
    const auto walls = scan_walls(k3_2, 1, full(10));
    REQUIRE(walls.size() == 3);
    // Sorted by slope: 3x - 2e, x, 3x + 2e.
    CHECK(walls[0].p == 3);
    CHECK(walls[0].q == -2);
    CHECK(walls[0].source == PicClass{2, -3, 1, k3_2});
    CHECK(walls[0].orbit.a == -1);
    CHECK(walls[0].orbit.b == 1);
    CHECK(walls[1].p == 1);
    CHECK(walls[1].q == 0);
    CHECK(walls[1].source == PicClass{0, 1, 1, k3_2});
    CHECK(walls[1].orbit.b == 1);
    CHECK(walls[2].p == 3);
    CHECK(walls[2].q == 2);
    CHECK(walls[2].slope == make_rat(2, 3));
}

TEST_CASE("soundness of emitted walls") {
    for (const Family& fam : {k3_2, kum_2})
        for (long long d : {1, 2}) {
            const auto walls = scan_walls(fam, d, full(10));
            for (const auto& wall : walls) {
                const Classification cls = classify(wall.source);
                REQUIRE(cls.verdict == Verdict::Mbm);
                CHECK(cls.orbit->a == wall.orbit.a);
                CHECK(cls.orbit->b == wall.orbit.b);
                const PicClass ray_class{wall.p, wall.q, d, fam};
                CHECK(bb_pairing(ray_class, wall.source) == 0);
                CHECK(bb_square(ray_class) > 0);
                CHECK(wall.slope == make_rat(wall.q, wall.p));
            }
        }
}

TEST_CASE("bounded completeness against a 3x rescan") {
    const auto at_bound = source_set(scan_walls(k3_2, 1, full(10)));
    std::set<std::pair<long long, long long>> rescanned;
    for (const auto& wall : scan_walls(k3_2, 1, full(30)))
        if (std::abs(wall.source.f) <= 10 && std::abs(wall.source.c) <= 10)
            rescanned.emplace(wall.source.f, wall.source.c);
    CHECK(at_bound == rescanned);
}

TEST_CASE("rays and sources are unique up to sign") {
    for (const Family& fam : {k3_2, kum_2}) {
        const auto walls = scan_walls(fam, 1, full(12));
        std::set<std::pair<long long, long long>> rays, sources;
        for (const auto& wall : walls) {
            CHECK(rays.emplace(wall.p, wall.q).second);
            CHECK(sources.emplace(wall.source.f, wall.source.c).second);
            CHECK(!sources.count({-wall.source.f, -wall.source.c}));
        }
    }
}

TEST_CASE("slope windows restrict the scan") {
    const ScanWindow narrow{make_rat(-1, 2), make_rat(1, 2), 10};
    const auto walls = scan_walls(k3_2, 1, narrow);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].p == 1);
    CHECK(walls[0].q == 0);

    CHECK_THROWS_AS(scan_walls(k3_2, 1, ScanWindow{make_rat(1, 2), make_rat(-1, 2), 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_walls(k3_2, 1, full(0)), std::invalid_argument);
}

TEST_CASE("negative d has no positive cone") {
    CHECK(scan_walls(k3_2, -1, full(10)).empty());
    CHECK_THROWS_AS(chamber_of(k3_2, -1, PicClass{1, 0, -1, k3_2}, full(10)),
                    std::invalid_argument);
}

TEST_CASE("chamber location") {
    const ChamberReport report = chamber_of(k3_2, 1, PicClass{4, -1, 1, k3_2}, full(10));
    REQUIRE(report.lower.has_value());
    REQUIRE(report.upper.has_value());
    CHECK(report.lower->p == 3);
    CHECK(report.lower->q == -2);
    CHECK(report.upper->p == 1);
    CHECK(report.upper->q == 0);

    // A probe on a wall ray: the ray bounds it on one side.
    const ChamberReport on_ray = chamber_of(k3_2, 1, PicClass{1, 0, 1, k3_2}, full(10));
    REQUIRE(on_ray.upper.has_value());
    CHECK(on_ray.upper->p == 1);
    CHECK(on_ray.upper->q == 0);
    REQUIRE(on_ray.lower.has_value());
    CHECK(on_ray.lower->slope == make_rat(-2, 3));

    CHECK_THROWS_AS(chamber_of(k3_2, 1, PicClass{0, 1, 1, k3_2}, full(10)),
                    std::invalid_argument);  // negative square
    CHECK_THROWS_AS(chamber_of(k3_2, 1, PicClass{-4, 1, 1, k3_2}, full(10)),
                    std::invalid_argument);  // wrong component
}
