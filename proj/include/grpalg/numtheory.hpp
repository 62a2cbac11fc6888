#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "grpalg/error.hpp"
#include "grpalg/rational.hpp"

namespace grpalg {

inline long gcd_long(long a, long b) { return std::gcd(a, b); }
inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long pow_mod(long base, long exp, long mod) {
    check(mod > 0, errc::bad_parameters, "pow_mod modulus must be positive");
    long result = 1 % mod;
    long b = mod_pos(base, mod);
    while (exp > 0) {
        if (exp & 1)
            result = (result * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return result;
}

// Trial division; inputs here are group orders and small parameters.
inline std::vector<std::pair<long, int>> factorize(long n) {
    check(n >= 1, errc::bad_parameters, "factorize expects n >= 1");
    std::vector<std::pair<long, int>> fs;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fs.emplace_back(p, e);
        }
    }
    if (n > 1)
        fs.emplace_back(n, 1);
    return fs;
}

inline bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

inline long euler_phi(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d)
                ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<long> coprime_residues(long n) {
    if (n == 1)
        return {0}; // the single residue class mod 1
    std::vector<long> out;
    for (long r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1)
            out.push_back(r);
    return out;
}

inline long inverse_mod(long a, long n) {
    check(n >= 1, errc::bad_parameters, "inverse_mod modulus must be positive");
    if (n == 1)
        return 0;
    long a0 = mod_pos(a, n);
    check(std::gcd(a0, n) == 1, errc::bad_parameters, "inverse_mod: not coprime");
    long t = 0, new_t = 1, r = n, new_r = a0;
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    return mod_pos(t, n);
}

inline long multiplicative_order(long a, long n) {
    check(n >= 1, errc::bad_parameters, "multiplicative_order modulus must be positive");
    if (n == 1)
        return 1;
    long a0 = mod_pos(a, n);
    check(std::gcd(a0, n) == 1, errc::bad_parameters, "multiplicative_order: not coprime");
    long x = a0 % n, ord = 1;
    while (x != 1) {
        x = (x * a0) % n;
        ++ord;
    }
    return ord;
}

// Legendre symbol (a/p) for odd prime p.
inline int legendre_symbol(const Int& a, long p) {
    check(p > 2 && is_prime(p), errc::bad_parameters, "legendre_symbol needs an odd prime");
    Int m = a % p;
    if (m < 0)
        m += p;
    if (m == 0)
        return 0;
    Int r;
    Int pp(p);
    Int e((p - 1) / 2);
    mpz_powm(r.get_mpz_t(), m.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
    return r == 1 ? 1 : -1;
}

// p-adic valuation of a nonzero rational.
inline long padic_valuation(const Rat& a, long p) {
    check(sgn(a) != 0, errc::bad_parameters, "valuation of zero");
    Int num = a.get_num(), den = a.get_den();
    long v = 0;
    Int q, pp(p);
    while (int_divisible(num, pp)) {
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
        num = q;
        ++v;
    }
    while (int_divisible(den, pp)) {
        mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        den = q;
        --v;
    }
    return v;
}

// The p-adic unit part a / p^{v_p(a)}.
inline Rat padic_unit_part(const Rat& a, long p) {
    long v = padic_valuation(a, p);
    Rat u = a;
    Rat pr(p);
    while (v > 0) {
        u /= pr;
        --v;
    }
    while (v < 0) {
        u *= pr;
        ++v;
    }
    return u;
}

// Unit rational reduced mod m (denominator inverted mod m); m must be
// coprime to the denominator.
inline long rat_mod(const Rat& a, long m) {
    Int num = a.get_num() % m, den = a.get_den() % m;
    long n = mod_pos(static_cast<long>(num.get_si()), m);
    long d = mod_pos(static_cast<long>(den.get_si()), m);
    return (n * inverse_mod(d, m)) % m;
}

// Odd primes dividing numerator or denominator. Values of group-ring
// provenance are small, so trial division suffices.
inline std::vector<long> odd_prime_support(const Rat& a) {
    std::vector<long> ps;
    for (const Int& part : {Int(a.get_num()), Int(a.get_den())}) {
        Int m = abs(part);
        Int q;
        while (mpz_divisible_ui_p(m.get_mpz_t(), 2)) {
            mpz_divexact_ui(q.get_mpz_t(), m.get_mpz_t(), 2);
            m = q;
        }
        long p = 3;
        while (m > 1) {
            while (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)))
                p += 2;
            ps.push_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
                mpz_divexact_ui(q.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
                m = q;
            }
        }
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

} // namespace grpalg
