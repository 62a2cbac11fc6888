#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grpalg/hilbert.hpp"
#include "grpalg/numtheory.hpp"

using namespace grpalg;

TEST_CASE("euler phi and divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(coprime_residues(8) == std::vector<long>{1, 3, 5, 7});
}

TEST_CASE("modular inverse and multiplicative order") {
    CHECK(inverse_mod(3, 8) == 3);
    CHECK(inverse_mod(5, 12) == 5);
    CHECK(multiplicative_order(3, 8) == 2);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK_THROWS_AS(inverse_mod(2, 8), error);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(Int(1), 3) == 1);
    CHECK(legendre_symbol(Int(-1), 3) == -1);
    CHECK(legendre_symbol(Int(2), 7) == 1);
    CHECK(legendre_symbol(Int(3), 7) == -1);
    CHECK(legendre_symbol(Int(0), 5) == 0);
}

TEST_CASE("p-adic valuation on rationals") {
    CHECK(padic_valuation(rat_of(12), 2) == 2);
    CHECK(padic_valuation(rat_of(5, 8), 2) == -3);
    CHECK(padic_unit_part(rat_of(5, 8), 2) == rat_of(5));
    CHECK(rat_mod(rat_of(5, 3), 7) == 4); // 5 * 3^{-1} = 5 * 5 = 25 = 4 mod 7
}

TEST_CASE("hilbert symbol: classical quaternion algebras") {
    // (-1,-1): the rational quaternions, a division algebra
    CHECK(hilbert_symbol_real(rat_of(-1), rat_of(-1)) == -1);
    CHECK_FALSE(quaternion_splits_over_rationals(rat_of(-1), rat_of(-1)));
    // (a, 1) splits for any nonzero a: (u,v,w) = (1,0,1)
    CHECK(quaternion_splits_over_rationals(rat_of(7), rat_of(1)));
    CHECK(quaternion_splits_over_rationals(rat_of(-5, 3), rat_of(1)));
    // (-1,-3) does not split: symbol at 3 is the Legendre symbol (-1/3) = -1
    CHECK(hilbert_symbol(rat_of(-1), rat_of(-3), 3) == -1);
    CHECK_FALSE(quaternion_splits_over_rationals(rat_of(-1), rat_of(-3)));
    // (-2,-5) does not split (the third listed definite algebra)
    CHECK_FALSE(quaternion_splits_over_rationals(rat_of(-2), rat_of(-5)));
    // (2, -1): 2 is a norm from Q(i), splits
    CHECK(quaternion_splits_over_rationals(rat_of(2), rat_of(-1)));
    // (-1, 3) vs (-1, -3): flipping the sign at the real place splits it?
    // x^2 + y^2 = 3 has no rational point; symbol at 3: (-1/3) = -1
    CHECK_FALSE(quaternion_splits_over_rationals(rat_of(-1), rat_of(3)));
}

TEST_CASE("hilbert product formula over all places") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    int done = 0;
    while (done < 200) {
        long an = num(rng), bn = num(rng);
        if (an == 0 || bn == 0)
            continue;
        Rat a = rat_of(an, den(rng));
        Rat b = rat_of(bn, den(rng));
        int prod = hilbert_symbol_real(a, b);
        for (long p : hilbert_places(a, b))
            prod *= hilbert_symbol(a, b, p);
        CHECK(prod == 1);
        ++done;
    }
}

TEST_CASE("hilbert symbol is multiplicative in each slot") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-20, 20);
    for (int t = 0; t < 100; ++t) {
        long a1 = num(rng), a2 = num(rng), b = num(rng);
        if (a1 == 0 || a2 == 0 || b == 0)
            continue;
        for (long p : {2L, 3L, 5L, 7L}) {
            int lhs = hilbert_symbol(rat_of(a1 * a2), rat_of(b), p);
            int rhs = hilbert_symbol(rat_of(a1), rat_of(b), p) *
                      hilbert_symbol(rat_of(a2), rat_of(b), p);
            CHECK(lhs == rhs);
        }
    }
}
