#pragma once

#include <optional>
#include <vector>

#include "mbmcone/orbits.hpp"

namespace mbmcone {

/// Scan region: a cap on the source coefficients plus an optional closed
/// slope interval for the emitted rays. Completeness of a scan is always
/// relative to coeff_bound; walls accumulate toward the boundary of the
/// positive cone and no finite scan sees them all.
struct ScanWindow {
    std::optional<mpq_class> slope_lo;
    std::optional<mpq_class> slope_hi;
    long long coeff_bound = 0;
};

/// Wall of the positive cone of the rank-2 lattice <2d> + <-t>: the primitive
/// ray p*x + q*e orthogonal to an MBM class, oriented into the positive
/// component (pairing with x positive). slope = q/p.
struct WallRay {
    long long p;
    long long q;
    mpq_class slope;
    PicClass source;
    OrbitDescriptor orbit;
};

/// Classifies every primitive (f, c) with |f|, |c| <= coeff_bound (up to
/// global sign) and emits one WallRay per MBM source whose orthogonal ray
/// lies in the positive cone and the window. Sorted by slope; no two rays
/// coincide and no two sources differ only by sign. For d <= 0 the lattice
/// has no positive cone and the scan is empty.
std::vector<WallRay> scan_walls(const Family& family, long long d, const ScanWindow& window);

/// Nearest scanned walls strictly below and above the probe slope; a probe
/// sitting on a wall gets that wall reported as the upper bound. Complete
/// only within the scan bound.
struct ChamberReport {
    std::optional<WallRay> lower;
    std::optional<WallRay> upper;
    long long coeff_bound;
};

/// Locates a positive-cone class among the scanned walls. Requires d > 0,
/// bb_square(probe) > 0 and positive pairing with the reference direction x.
ChamberReport chamber_of(const Family& family, long long d, const PicClass& probe,
                         const ScanWindow& window);

}  // namespace mbmcone
