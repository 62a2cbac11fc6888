#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grpalg/cyclotomic.hpp"

using namespace grpalg;

namespace {

std::vector<Int> ipoly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs)
        v.emplace_back(c);
    return v;
}

Cyclotomic random_elt(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-4, 4);
    Cyclotomic z = Cyclotomic::constant(n, Rat(0));
    long deg = euler_phi(n);
    for (long i = 0; i < deg; ++i)
        z += rat_of(c(rng)) * Cyclotomic::zeta_power(n, i);
    return z;
}

} // namespace

TEST_CASE("cyclotomic polynomials: known values") {
    CHECK(cyclotomic_polynomial(1) == ipoly({-1, 1}));        // x - 1
    CHECK(cyclotomic_polynomial(2) == ipoly({1, 1}));         // x + 1
    CHECK(cyclotomic_polynomial(4) == ipoly({1, 0, 1}));      // x^2 + 1
    CHECK(cyclotomic_polynomial(3) == ipoly({1, 1, 1}));      // x^2 + x + 1
    CHECK(cyclotomic_polynomial(6) == ipoly({1, -1, 1}));     // x^2 - x + 1
    CHECK(cyclotomic_polynomial(12) == ipoly({1, 0, -1, 0, 1})); // x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(8) == ipoly({1, 0, 0, 0, 1}));   // x^4 + 1
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
    // independent route: multiply the factors back together
    for (int n : {6, 8, 12, 15, 16, 24, 30}) {
        std::vector<Rat> acc{Rat(1)};
        for (long d : divisors(n)) {
            auto phi = cyclotomic_polynomial(static_cast<int>(d));
            std::vector<Rat> f(phi.size());
            for (size_t i = 0; i < phi.size(); ++i)
                f[i] = Rat(phi[i]);
            acc = detail::poly_mul(acc, f);
        }
        REQUIRE(acc.size() == static_cast<size_t>(n) + 1);
        CHECK(acc.front() == -1);
        CHECK(acc.back() == 1);
        for (size_t i = 1; i < acc.size() - 1; ++i)
            CHECK(sgn(acc[i]) == 0);
    }
}

TEST_CASE("basic arithmetic and powers") {
    Cyclotomic z4 = Cyclotomic::zeta(4);
    CHECK(z4 * z4 == Cyclotomic::constant(4, rat_of(-1)));
    CHECK(Cyclotomic::zeta_power(4, 3) == -z4);
    Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(z3 * z3 * z3 == Cyclotomic::constant(3, rat_of(1)));
    // zeta_3^2 = -1 - zeta_3 in the power basis
    CHECK(Cyclotomic::zeta_power(3, 2) == -Cyclotomic::constant(3, rat_of(1)) - z3);
    // rational promotion
    CHECK(z4 + Cyclotomic(rat_of(2)) == z4 + Cyclotomic::constant(4, rat_of(2)));
}

TEST_CASE("galois automorphisms") {
    Cyclotomic z4 = Cyclotomic::zeta(4);
    CHECK(z4.galois(3) == -z4);
    Cyclotomic z8 = Cyclotomic::zeta(8);
    CHECK(z8.conj() == Cyclotomic::zeta_power(8, 7));
    CHECK_THROWS_AS(z8.galois(2), error);

    // composition law: galois(r) o galois(s) = galois(rs mod n)
    std::mt19937_64 rng(11);
    for (int n : {5, 8, 12}) {
        auto rs = coprime_residues(n);
        for (int t = 0; t < 20; ++t) {
            Cyclotomic z = random_elt(n, rng);
            long r = rs[rng() % rs.size()], s = rs[rng() % rs.size()];
            CHECK(z.galois(s).galois(r) == z.galois(mod_pos(r * s, n)));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(99);
    for (int n : {3, 4, 5, 8, 12}) {
        for (int t = 0; t < 15; ++t) {
            Cyclotomic a = random_elt(n, rng), b = random_elt(n, rng), c = random_elt(n, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK(a * a.inverse() == Cyclotomic::constant(n, rat_of(1)));
        }
    }
}

TEST_CASE("inverse of 1 + zeta_3") {
    // 1 + z3 = -z3^2, so the inverse is -z3^{-2} = -z3; the product check is
    // the oracle
    Cyclotomic a = Cyclotomic::constant(3, rat_of(1)) + Cyclotomic::zeta(3);
    Cyclotomic inv = a.inverse();
    CHECK(a * inv == Cyclotomic::constant(3, rat_of(1)));
    CHECK(inv == -Cyclotomic::zeta(3));
}

TEST_CASE("cyclotomic units") {
    // eta_3(zeta_8) = 1 + z8 + z8^2
    CyclotomicUnit u = cyclotomic_unit(8, 3);
    Cyclotomic expect = Cyclotomic::constant(8, rat_of(1)) + Cyclotomic::zeta(8) +
                        Cyclotomic::zeta_power(8, 2);
    CHECK(u.value == expect);
    CHECK(u.value * u.inverse == Cyclotomic::constant(8, rat_of(1)));

    // eta_1 = 1
    CyclotomicUnit t = cyclotomic_unit(5, 1);
    CHECK(t.value.is_one());

    // eta_2(zeta_3) = 1 + zeta_3 with inverse eta_2(zeta_3^2)
    CyclotomicUnit v = cyclotomic_unit(3, 2);
    CHECK(v.value == Cyclotomic::constant(3, rat_of(1)) + Cyclotomic::zeta(3));
    CHECK(v.l == 2);
    CHECK(v.value * v.inverse == Cyclotomic::constant(3, rat_of(1)));

    CHECK_THROWS_AS(cyclotomic_unit(8, 2), error);
    CHECK_THROWS_AS(cyclotomic_unit(1, 1), error);
}

TEST_CASE("eta inverse law on all valid indices") {
    for (int n : {5, 7, 8, 9, 12}) {
        for (long k : coprime_residues(n)) {
            CyclotomicUnit u = cyclotomic_unit(n, k);
            CHECK(mod_pos(u.k * u.l, n) == 1 % n);
            CHECK(u.value * u.inverse == Cyclotomic::constant(n, rat_of(1)));
        }
    }
}

TEST_CASE("division by zero and conductor mismatch are rejected") {
    CHECK_THROWS_AS(Cyclotomic::constant(4, rat_of(0)).inverse(), error);
    Cyclotomic a = Cyclotomic::zeta(4), b = Cyclotomic::zeta(8);
    CHECK_THROWS_AS(a * b, error);
    CHECK_THROWS_AS(a + b, error);
}
