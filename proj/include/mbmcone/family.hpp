#pragma once

#include <stdexcept>
#include <string>

namespace mbmcone {

enum class FamilyKind { K3, Kummer };

/// Deformation type of an irreducible holomorphic symplectic manifold of
/// complex dimension 2n: Hilbert scheme of n points on a K3 surface, or the
/// generalized Kummer variety of a 2-torus. The exceptional class e of the
/// Hilbert-Chow contraction has square -t with t = 2(n-1) (K3) or 2(n+1)
/// (Kummer); t generates the discriminant group Z/tZ.
struct Family {
    FamilyKind kind;
    long long n;  // half the complex dimension

    Family(FamilyKind kind_, long long n_) : kind(kind_), n(n_) {
        if (n < 2)
            throw std::invalid_argument("family requires n >= 2 (dimension 2n >= 4)");
        if (n > 1'000'000'000)
            throw std::invalid_argument("family parameter n too large");
    }

    long long t() const { return kind == FamilyKind::K3 ? 2 * (n - 1) : 2 * (n + 1); }

    bool operator==(const Family& o) const { return kind == o.kind && n == o.n; }
    bool operator!=(const Family& o) const { return !(*this == o); }
};

inline std::string to_string(FamilyKind k) {
    return k == FamilyKind::K3 ? "k3" : "kummer";
}

inline FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "k3" || s == "K3")
        return FamilyKind::K3;
    if (s == "kummer" || s == "Kummer")
        return FamilyKind::Kummer;
    throw std::invalid_argument("unknown family kind: " + s);
}

}  // namespace mbmcone
