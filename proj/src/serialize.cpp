#include "mbmcone/serialize.hpp"

#include <sstream>

namespace mbmcone {

static long long as_ll(const mpz_class& z) { return to_ll(z); }

json to_json(const mpq_class& q) {
    return json{{"num", as_ll(q.get_num())}, {"den", as_ll(q.get_den())}};
}

json to_json(const Family& family) {
    return json{{"kind", to_string(family.kind)}, {"n", family.n}};
}

json to_json(const PicClass& c) {
    return json{{"f", c.f}, {"c", c.c}, {"d", c.d}};
}

json to_json(const DualClass& c) {
    return json{{"x", to_json(c.f_hat)}, {"e", to_json(c.c_hat)}};
}

json to_json(const OrbitDescriptor& orbit) {
    return json{{"a", orbit.a},
                {"b", orbit.b},
                {"q_hat", to_json(orbit.q_hat)},
                {"delta_abs", orbit.delta_abs},
                {"canonical_rep", to_json(orbit.canonical_rep)}};
}

json to_json(const CurveRealization& curve) {
    return json{{"genus", curve.genus},
                {"k", curve.k},
                {"homology_class", to_json(curve.homology_class)},
                {"locus_dim", curve.locus_dim},
                {"fiber_dim", curve.fiber_dim},
                {"exceptional_fiber", curve.exceptional_fiber}};
}

json to_json(const WallRay& wall) {
    return json{{"ray", json{{"p", wall.p}, {"q", wall.q}}},
                {"slope", to_json(wall.slope)},
                {"source", to_json(wall.source)},
                {"orbit", json{{"a", wall.orbit.a}, {"b", wall.orbit.b}}}};
}

json make_record(const std::string& command, const Family& family, json payload) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"family", to_json(family)},
                {"payload", std::move(payload)}};
}

json enumerate_payload(const Family& family) {
    json orbits = json::array();
    for (const OrbitDescriptor& orbit : enumerate_mbm_orbits(family)) {
        json entry = to_json(orbit);
        entry["curve"] = to_json(realize_orbit(family, orbit));
        orbits.push_back(std::move(entry));
    }
    return json{{"orbits", std::move(orbits)}};
}

static json to_json(const NormalizationTrace& trace) {
    return json{{"r", trace.normalized.r},
                {"b_norm", trace.normalized.b_norm},
                {"q_x", as_ll(trace.normalized.q_x)},
                {"l", trace.shift}};
}

json classify_payload(const PicClass& input) {
    const Classification cls = classify(input);
    json payload{{"input", to_json(input)}};
    switch (cls.verdict) {
        case Verdict::Mbm:
            payload["verdict"] = "MBM";
            payload["orbit"] = to_json(*cls.orbit);
            payload["normalization"] = to_json(*cls.trace);
            break;
        case Verdict::NotMbm:
            payload["verdict"] = "NotMBM";
            payload["reason"] = cls.reason;
            payload["normalization"] = to_json(*cls.trace);
            break;
        case Verdict::NonNegativeSquare:
            payload["verdict"] = "NonNegativeSquare";
            break;
    }
    return payload;
}

json walls_payload(const Family& family, long long d, const ScanWindow& window,
                   const std::optional<PicClass>& probe) {
    json walls = json::array();
    for (const WallRay& wall : scan_walls(family, d, window))
        walls.push_back(to_json(wall));

    json window_json{{"slope_lo", window.slope_lo ? to_json(*window.slope_lo) : json(nullptr)},
                     {"slope_hi", window.slope_hi ? to_json(*window.slope_hi) : json(nullptr)}};
    json payload{{"d", d},
                 {"coeff_bound", window.coeff_bound},
                 {"window", std::move(window_json)},
                 {"completeness", "complete only within the scan bound"},
                 {"walls", std::move(walls)}};
    if (probe) {
        const ChamberReport report = chamber_of(family, d, *probe, window);
        payload["chamber"] = json{
            {"probe", to_json(*probe)},
            {"lower", report.lower ? to_json(*report.lower) : json(nullptr)},
            {"upper", report.upper ? to_json(*report.upper) : json(nullptr)}};
    }
    return payload;
}

json bm_check_payload(const Family& family, const MukaiScanBounds& bounds, bool& match) {
    std::set<std::pair<long long, long long>> expected;
    for (const OrbitDescriptor& orbit : enumerate_mbm_orbits(family))
        expected.emplace(orbit.a, orbit.b);
    const auto scanned = scan_wall_orbits(family, bounds);
    match = scanned == expected;
    // Both lists in (a, b) order so that equal sets compare equal verbatim.
    json enumerated = json::array(), reached = json::array();
    for (const auto& [a, b] : expected)
        enumerated.push_back(json::array({a, b}));
    for (const auto& [a, b] : scanned)
        reached.push_back(json::array({a, b}));
    return json{{"bounds", json{{"u", bounds.u_bound}, {"s", bounds.s_bound},
                                {"kappa", bounds.kappa_bound}}},
                {"enumerated_orbits", std::move(enumerated)},
                {"wall_orbits", std::move(reached)},
                {"match", match}};
}

std::string dump_record(const json& record) { return record.dump(2) + "\n"; }

std::string walls_csv(const std::vector<WallRay>& walls) {
    std::ostringstream out;
    out << "slope_num,slope_den,source_f,source_c,orbit_a,orbit_b\n";
    for (const WallRay& wall : walls)
        out << as_ll(wall.slope.get_num()) << ',' << as_ll(wall.slope.get_den()) << ','
            << wall.source.f << ',' << wall.source.c << ',' << wall.orbit.a << ','
            << wall.orbit.b << '\n';
    return out.str();
}

std::string orbits_csv(const std::vector<OrbitDescriptor>& orbits, const Family& family) {
    std::ostringstream out;
    out << "a,b,q_hat_num,q_hat_den,delta_abs,rep_f,rep_c,rep_d,genus,k,locus_dim,fiber_dim\n";
    for (const OrbitDescriptor& orbit : orbits) {
        const CurveRealization curve = realize_orbit(family, orbit);
        out << orbit.a << ',' << orbit.b << ',' << as_ll(orbit.q_hat.get_num()) << ','
            << as_ll(orbit.q_hat.get_den()) << ',' << orbit.delta_abs << ','
            << orbit.canonical_rep.f << ',' << orbit.canonical_rep.c << ','
            << orbit.canonical_rep.d << ',' << curve.genus << ',' << curve.k << ','
            << curve.locus_dim << ',' << curve.fiber_dim << '\n';
    }
    return out.str();
}

}  // namespace mbmcone
