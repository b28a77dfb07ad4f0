#pragma once

#include "mbmcone/orbits.hpp"

namespace mbmcone {

/// Numerical shadow of the rational curve realizing an orbit on the model
/// variety (Hilbert scheme resp. Kummer variety over a surface with cyclic
/// Picard/Neron-Severi group): the source curve C of genus g = a + 1 carries
/// a pencil of degree k = b_norm*t/r - g + 1 whose image is a rational curve
/// in the homology class C - (g-1+k) * e/t, i.e. x - (b_norm/r)*e. Its
/// deformations sweep a locus of dimension 2n - k + g whose rational-quotient
/// fibres have dimension k - g.
///
/// The orbit (0, 1) of the exceptional class is not produced by a pencil on a
/// curve: it is the fibre class of the exceptional divisor, a P^1-bundle over
/// the diagonal. Its record carries (genus, k) = (0, 1), which reproduces the
/// correct dimensions locus_dim = 2n - 1 and fiber_dim = 1, and is flagged.
struct CurveRealization {
    long long genus;       // genus of the source curve (0 for the exceptional fibre)
    long long k;           // pencil degree
    DualClass homology_class;
    long long locus_dim;   // 2n - k + genus
    long long fiber_dim;   // k - genus, equals the codimension of the locus
    bool exceptional_fiber;
};

/// Realizes an orbit and asserts the feasibility chain (k range, k > 2g - 2,
/// gonality bound). A violation means a bug, not bad input, and throws
/// std::logic_error.
CurveRealization realize_orbit(const Family& family, const OrbitDescriptor& orbit);

/// Largest possible genus of a source curve: ceil((n+3)/4) - 1 for K3,
/// ceil((n+5)/4) - 1 for Kummer.
long long genus_bound(const Family& family);

/// Sharp lower bound for q(dual) over MBM classes: -(n+3)/2 for K3,
/// -(n+1)/2 for Kummer.
mpq_class extremal_qhat(const Family& family);

}  // namespace mbmcone
