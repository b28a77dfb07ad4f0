#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace mbmcone {

// All derived lattice quantities are computed in exact arithmetic: mpz for
// integers that can outgrow 64 bits, mpq for rationals. Coordinates and
// structural parameters (n, t, a, b, ...) stay machine integers.

inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

inline long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::invalid_argument("integer does not fit in 64 bits: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Canonical rational num/den with den > 0 and gcd(num, den) = 1.
inline mpq_class make_rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class make_rat(long long num, long long den) {
    return make_rat(to_mpz(num), to_mpz(den));
}

}  // namespace mbmcone
