#pragma once

#include <gmpxx.h>

#include "mbmcone/family.hpp"
#include "mbmcone/numeric.hpp"

namespace mbmcone {

/// Integral class f*x + c*e in the rank-2 reference lattice <x> + <e>, where
/// x is a primitive class of square 2d sitting in the unimodular part of the
/// second cohomology and e is half of the exceptional divisor, q(e) = -t,
/// q(x, e) = 0. All embedding invariants (divisibility, discriminant image,
/// dual class) have closed forms in these coordinates, so the full rank-23
/// (resp. rank-7) lattice is never materialized.
struct PicClass {
    long long f{};  // coefficient of x
    long long c{};  // coefficient of e
    long long d{};  // half-square of x: q(x) = 2d (any integer, may be negative)
    Family family;

    bool operator==(const PicClass& o) const {
        return f == o.f && c == o.c && d == o.d && family == o.family;
    }
};

/// Rational class f_hat*x + c_hat*e, the image of a primitive class under
/// division by its divisibility. Pairs integrally with the whole lattice.
struct DualClass {
    mpq_class f_hat;
    mpq_class c_hat;
    long long d{};  // half-square of x, carried over from the source class
    Family family;
};

/// Residue class modulo t in the discriminant group Z/tZ.
struct DiscriminantElement {
    long long value;  // normalized to [0, t)
    long long t;
};

bool is_primitive(const PicClass& a);

/// q(f*x + c*e) = 2d*f^2 - t*c^2.
mpz_class bb_square(const PicClass& a);

/// Polarization of bb_square; requires matching family and d.
mpz_class bb_pairing(const PicClass& a, const PicClass& b);

/// Positive generator of the pairing ideal (a, L): gcd(f, c*t).
/// Requires a primitive.
long long divisibility(const PicClass& a);

/// Image of a/d(a) in the discriminant group: (c*t/d(a)) mod t.
DiscriminantElement delta(const PicClass& a);

/// Signed representative of +-value in [0, t/2].
long long signed_rep(const DiscriminantElement& e);

/// a / d(a). Satisfies q(dual) * d(a)^2 = q(a) exactly.
DualClass dual_class(const PicClass& a);

/// Rational extension of the form to dual classes.
mpq_class bb_square(const DualClass& a);

}  // namespace mbmcone
