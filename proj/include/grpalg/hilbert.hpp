#pragma once

#include <vector>

#include "grpalg/numtheory.hpp"
#include "grpalg/rational.hpp"

namespace grpalg {

// Hilbert symbol (a,b)_p over Q_p, computed from p-adic valuations and
// Legendre symbols. Encodes whether u^2 = a v^2 + b w^2 has a nontrivial
// local solution.
inline int hilbert_symbol(const Rat& a, const Rat& b, long p) {
    check(sgn(a) != 0 && sgn(b) != 0, errc::bad_parameters, "hilbert_symbol needs nonzero arguments");
    check(p >= 2 && is_prime(p), errc::bad_parameters, "hilbert_symbol needs a prime place");
    long alpha = padic_valuation(a, p);
    long beta = padic_valuation(b, p);
    Rat u = padic_unit_part(a, p);
    Rat v = padic_unit_part(b, p);
    if (p == 2) {
        auto eps = [](long x) { return ((x - 1) / 2) % 2 != 0; };      // x odd, mod 4 part
        auto omega = [](long x) { return ((x * x - 1) / 8) % 2 != 0; }; // x odd, mod 8 part
        long um = rat_mod(u, 8);
        long vm = rat_mod(v, 8);
        bool exp = (eps(um) && eps(vm)) ^ ((alpha % 2 != 0) && omega(vm)) ^
                   ((beta % 2 != 0) && omega(um));
        return exp ? -1 : 1;
    }
    int s = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0)
        s = -s;
    if (beta % 2 != 0)
        s *= legendre_symbol(Int(rat_mod(u, p)), p);
    if (alpha % 2 != 0)
        s *= legendre_symbol(Int(rat_mod(v, p)), p);
    return s;
}

// The real place: (a,b)_oo = -1 exactly when both arguments are negative.
inline int hilbert_symbol_real(const Rat& a, const Rat& b) {
    check(sgn(a) != 0 && sgn(b) != 0, errc::bad_parameters, "hilbert_symbol needs nonzero arguments");
    return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
}

// Finite places where the symbol can be nontrivial: 2 and the odd primes
// dividing either argument.
inline std::vector<long> hilbert_places(const Rat& a, const Rat& b) {
    std::vector<long> ps{2};
    for (long p : odd_prime_support(a))
        ps.push_back(p);
    for (long p : odd_prime_support(b))
        ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

// (a,b/Q) ~ M_2(Q) iff the symbol is +1 at every place (Hasse-Minkowski).
inline bool quaternion_splits_over_rationals(const Rat& a, const Rat& b) {
    if (hilbert_symbol_real(a, b) == -1)
        return false;
    for (long p : hilbert_places(a, b))
        if (hilbert_symbol(a, b, p) == -1)
            return false;
    return true;
}

} // namespace grpalg
