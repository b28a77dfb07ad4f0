#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mbmcone/curves.hpp"
#include "mbmcone/mukai.hpp"
#include "mbmcone/walls.hpp"

namespace mbmcone {

using json = nlohmann::ordered_json;

// Machine-readable output records, schema_version "1". Field order is fixed
// by construction order, rationals are always {num, den} with den > 0 and
// gcd(num, den) = 1, and nothing in a record depends on the environment, so
// identical invocations serialize byte-identically.

json to_json(const mpq_class& q);
json to_json(const Family& family);
json to_json(const PicClass& c);
json to_json(const DualClass& c);
json to_json(const OrbitDescriptor& orbit);
json to_json(const CurveRealization& curve);
json to_json(const WallRay& wall);

json make_record(const std::string& command, const Family& family, json payload);

json enumerate_payload(const Family& family);
json classify_payload(const PicClass& input);
json walls_payload(const Family& family, long long d, const ScanWindow& window,
                   const std::optional<PicClass>& probe);
/// Returns the payload and reports whether the two orbit routes agree.
json bm_check_payload(const Family& family, const MukaiScanBounds& bounds, bool& match);

std::string dump_record(const json& record);

/// One wall per line: slope_num,slope_den,source_f,source_c,orbit_a,orbit_b.
std::string walls_csv(const std::vector<WallRay>& walls);
std::string orbits_csv(const std::vector<OrbitDescriptor>& orbits, const Family& family);

}  // namespace mbmcone
