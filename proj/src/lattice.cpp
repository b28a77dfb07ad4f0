#include "mbmcone/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace mbmcone {

bool is_primitive(const PicClass& a) {
    if (a.f == 0 && a.c == 0)
        return false;
    return std::gcd(a.f, a.c) == 1;
}

static void require_primitive(const PicClass& a) {
    if (!is_primitive(a))
        throw std::invalid_argument("class (" + std::to_string(a.f) + ", " +
                                    std::to_string(a.c) + ") is not primitive");
}

mpz_class bb_square(const PicClass& a) {
    const mpz_class f = to_mpz(a.f), c = to_mpz(a.c);
    return 2 * to_mpz(a.d) * f * f - to_mpz(a.family.t()) * c * c;
}

mpz_class bb_pairing(const PicClass& a, const PicClass& b) {
    if (a.family != b.family)
        throw std::invalid_argument("bb_pairing: family mismatch");
    if (a.d != b.d)
        throw std::invalid_argument("bb_pairing: classes live in different reference lattices (d mismatch)");
    return 2 * to_mpz(a.d) * to_mpz(a.f) * to_mpz(b.f) -
           to_mpz(a.family.t()) * to_mpz(a.c) * to_mpz(b.c);
}

long long divisibility(const PicClass& a) {
    require_primitive(a);
    // x is primitive in the unimodular summand, so pairing against the whole
    // lattice realizes f*Z + c*t*Z.
    const mpz_class g = gcd_z(to_mpz(a.f), to_mpz(a.c) * to_mpz(a.family.t()));
    return to_ll(g);  // divides f (or equals t when f = 0), so it fits
}

DiscriminantElement delta(const PicClass& a) {
    const long long t = a.family.t();
    const mpz_class num = to_mpz(a.c) * to_mpz(t) / to_mpz(divisibility(a));
    mpz_class v = num % to_mpz(t);
    if (v < 0)
        v += to_mpz(t);
    return DiscriminantElement{to_ll(v), t};
}

long long signed_rep(const DiscriminantElement& e) {
    const long long v = ((e.value % e.t) + e.t) % e.t;
    return std::min(v, e.t - v);
}

DualClass dual_class(const PicClass& a) {
    const long long div = divisibility(a);
    return DualClass{make_rat(a.f, div), make_rat(a.c, div), a.d, a.family};
}

mpq_class bb_square(const DualClass& a) {
    return 2 * to_mpz(a.d) * a.f_hat * a.f_hat -
           to_mpz(a.family.t()) * a.c_hat * a.c_hat;
}

}  // namespace mbmcone
