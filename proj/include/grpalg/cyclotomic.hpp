#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "grpalg/numtheory.hpp"
#include "grpalg/rational.hpp"

namespace grpalg {

namespace detail {

inline void poly_trim(std::vector<Rat>& p) {
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Remainder of a modulo monic m.
inline std::vector<Rat> poly_mod_monic(std::vector<Rat> a, const std::vector<Rat>& m) {
    poly_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rat lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i)
            a[shift + i] -= lead * m[i];
        poly_trim(a);
    }
    return a;
}

// Exact division of polynomials with integer coefficients (used to peel
// cyclotomic factors off x^n - 1).
inline std::vector<Int> ipoly_divexact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1, Int(0));
    for (size_t k = q.size(); k-- > 0;) {
        Int c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[k + i] -= c * b[i];
    }
    return q;
}

} // namespace detail

// n-th cyclotomic polynomial, monic of degree phi(n), coefficients
// low-to-high.
inline std::vector<Int> cyclotomic_polynomial(int n) {
    check(n >= 1, errc::bad_parameters, "cyclotomic_polynomial expects n >= 1");
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Int> num(static_cast<size_t>(n) + 1, Int(0));
    num.front() = -1;
    num.back() = 1; // x^n - 1
    std::function<const std::vector<Int>&(int)> get = [&](int m) -> const std::vector<Int>& {
        auto jt = cache.find(m);
        if (jt != cache.end())
            return jt->second;
        std::vector<Int> acc(static_cast<size_t>(m) + 1, Int(0));
        acc.front() = -1;
        acc.back() = 1;
        for (long d : divisors(m))
            if (d < m)
                acc = detail::ipoly_divexact(acc, get(static_cast<int>(d)));
        return cache.emplace(m, std::move(acc)).first->second;
    };
    return get(n);
}

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial. The stored conductor is
// fixed by the constructor; no automatic conductor minimization. Values
// stored at conductor 1 act as plain rationals and promote into any
// conductor on mixed arithmetic.
class Cyclotomic {
  public:
    Cyclotomic() : conductor_(1), coeffs_{Rat(0)} {}
    explicit Cyclotomic(const Rat& r) : conductor_(1), coeffs_{r} {}
    explicit Cyclotomic(long v) : conductor_(1), coeffs_{Rat(v)} {}

    static Cyclotomic zeta(int n) {
        check(n >= 1, errc::bad_parameters, "zeta conductor must be positive");
        Cyclotomic z;
        z.conductor_ = n;
        std::vector<Rat> poly(2, Rat(0));
        poly[1] = 1;
        z.coeffs_ = reduce(n, std::move(poly));
        return z;
    }

    static Cyclotomic constant(int n, const Rat& r) {
        Cyclotomic z;
        z.conductor_ = n;
        z.coeffs_ = reduce(n, {r});
        return z;
    }

    // zeta_n^k for any integer k.
    static Cyclotomic zeta_power(int n, long k) {
        Cyclotomic z;
        z.conductor_ = n;
        std::vector<Rat> poly(static_cast<size_t>(mod_pos(k, n)) + 1, Rat(0));
        poly.back() = 1;
        z.coeffs_ = reduce(n, std::move(poly));
        return z;
    }

    int conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0)
                return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0)
                return false;
        return true;
    }

    Rat rational_value() const {
        check(is_rational(), errc::bad_parameters, "value is not rational");
        return coeffs_[0];
    }

    bool is_one() const { return is_rational() && coeffs_[0] == 1; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < y.coeffs_.size(); ++i)
            x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < y.coeffs_.size(); ++i)
            x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        Cyclotomic r;
        r.conductor_ = x.conductor_;
        r.coeffs_ = reduce(x.conductor_, detail::poly_mul(x.coeffs_, y.coeffs_));
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_)
            return a.coeffs_ == b.coeffs_;
        if (a.is_rational() && b.is_rational())
            return a.coeffs_[0] == b.coeffs_[0];
        if (a.conductor_ == 1 || b.conductor_ == 1)
            return false;
        fail(errc::ring_mismatch, "comparing cyclotomics of different conductors");
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // the cyclotomic polynomial.
    Cyclotomic inverse() const {
        check(!is_zero(), errc::division_by_zero, "inverse of zero cyclotomic");
        std::vector<Rat> phi = phi_poly(conductor_);
        std::vector<Rat> r0 = phi, r1 = coeffs_;
        detail::poly_trim(r1);
        std::vector<Rat> s0 = {}, s1 = {Rat(1)}; // s tracks the coefficient of *this
        while (true) {
            detail::poly_trim(r1);
            invariant(!r1.empty(), "cyclotomic polynomial not coprime to nonzero element");
            if (r1.size() == 1) // nonzero constant: done
                break;
            // divide r0 by r1
            std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
            std::vector<Rat> rem = r0;
            while (rem.size() >= r1.size() && !rem.empty()) {
                detail::poly_trim(rem);
                if (rem.size() < r1.size())
                    break;
                Rat c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] -= c * r1[i];
            }
            detail::poly_trim(rem);
            std::vector<Rat> s2 = s0;
            // s2 = s0 - q*s1
            std::vector<Rat> qs1 = detail::poly_mul(q, s1);
            if (s2.size() < qs1.size())
                s2.resize(qs1.size(), Rat(0));
            for (size_t i = 0; i < qs1.size(); ++i)
                s2[i] -= qs1[i];
            detail::poly_trim(s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        Rat c = r1[0];
        std::vector<Rat> inv = s1;
        for (auto& x : inv)
            x /= c;
        Cyclotomic out;
        out.conductor_ = conductor_;
        out.coeffs_ = reduce(conductor_, std::move(inv));
        invariant((out * *this).is_one(), "cyclotomic inverse verification failed");
        return out;
    }

    // Ring automorphism zeta -> zeta^r, gcd(r, conductor) = 1.
    Cyclotomic galois(long r) const {
        check(std::gcd(mod_pos(r, conductor_), static_cast<long>(conductor_)) == 1 ||
                  conductor_ == 1,
              errc::bad_galois_index, "galois index not coprime to conductor");
        std::vector<Rat> poly(static_cast<size_t>(conductor_), Rat(0));
        if (conductor_ == 1)
            return *this;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (sgn(coeffs_[i]) == 0)
                continue;
            long e = mod_pos(static_cast<long>(i) * r, conductor_);
            poly[static_cast<size_t>(e)] += coeffs_[i];
        }
        Cyclotomic out;
        out.conductor_ = conductor_;
        out.coeffs_ = reduce(conductor_, std::move(poly));
        return out;
    }

    // Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conj() const { return galois(conductor_ - 1 == 0 ? 1 : conductor_ - 1); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (sgn(coeffs_[i]) == 0)
                continue;
            if (!first)
                os << " + ";
            os << rat_str(coeffs_[i]);
            if (i > 0)
                os << "*z" << conductor_ << "^" << i;
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }

  private:
    int conductor_;
    std::vector<Rat> coeffs_;

    static std::vector<Rat> phi_poly(int n) {
        std::vector<Int> ip = cyclotomic_polynomial(n);
        std::vector<Rat> p(ip.size());
        for (size_t i = 0; i < ip.size(); ++i)
            p[i] = Rat(ip[i]);
        return p;
    }

    static std::vector<Rat> reduce(int n, std::vector<Rat> poly) {
        size_t deg = static_cast<size_t>(euler_phi(n));
        poly = detail::poly_mod_monic(std::move(poly), phi_poly(n));
        poly.resize(deg, Rat(0));
        return poly;
    }

    // Promote conductor-1 (plain rational) values into the other side's
    // field; any other mismatch is an error.
    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_)
            return {a, b};
        if (a.conductor_ == 1)
            return {constant(b.conductor_, a.coeffs_[0]), b};
        if (b.conductor_ == 1)
            return {a, constant(a.conductor_, b.coeffs_[0])};
        fail(errc::ring_mismatch, "cyclotomic conductors differ");
    }
};

// Cyclotomic unit eta_k(zeta_n) = (1 - zeta_n^k)/(1 - zeta_n) together with
// its certified inverse eta_l(zeta_n^k), kl = 1 mod n.
struct CyclotomicUnit {
    Cyclotomic value;
    Cyclotomic inverse;
    long k = 1;
    long l = 1;
};

inline CyclotomicUnit cyclotomic_unit(int n, long k) {
    check(n > 1, errc::bad_index, "cyclotomic unit needs conductor > 1");
    long k0 = mod_pos(k, n);
    check(k0 != 0 && std::gcd(k0, static_cast<long>(n)) == 1, errc::bad_index,
          "eta index must be coprime to the conductor");
    CyclotomicUnit u;
    u.k = k0;
    if (k0 == 1) { // eta_1 = 1
        u.value = Cyclotomic::constant(n, Rat(1));
        u.inverse = u.value;
        u.l = 1;
        return u;
    }
    u.l = inverse_mod(k0, n);
    Cyclotomic v = Cyclotomic::constant(n, Rat(0));
    for (long i = 0; i < k0; ++i)
        v += Cyclotomic::zeta_power(n, i); // (1 - z^k)/(1 - z) = 1 + z + ... + z^{k-1}
    Cyclotomic w = Cyclotomic::constant(n, Rat(0));
    for (long i = 0; i < u.l; ++i)
        w += Cyclotomic::zeta_power(n, i * k0); // eta_l at z^k
    invariant((v * w).is_one(), "cyclotomic unit inverse verification failed");
    u.value = v;
    u.inverse = w;
    return u;
}

} // namespace grpalg
