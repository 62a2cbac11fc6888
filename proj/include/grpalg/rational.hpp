#pragma once

#include <gmpxx.h>
#include <string>

#include "grpalg/error.hpp"

namespace grpalg {

// Exact coefficient types. Rat is always stored reduced with positive
// denominator (GMP canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    check(den != 0, errc::division_by_zero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_of(const Int& num, const Int& den) {
    check(sgn(den) != 0, errc::division_by_zero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Serialized form: "p" or "p/q", exact.
inline std::string rat_str(const Rat& r) { return r.get_str(); }
inline std::string int_str(const Int& z) { return z.get_str(); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool int_divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace grpalg
