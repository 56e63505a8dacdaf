#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pqfrac/numtheory.hpp"

using namespace pqfrac;

TEST_CASE("residue_mod_power reduces modulo p^alpha") {
    CHECK(residue_mod_power(53, 3, 2) == 8);
    CHECK(residue_mod_power(8, 2, 3) == 0);
    CHECK(residue_mod_power(7, 5, 1) == 2);
    CHECK(residue_mod_power(0, 2, 4) == 0);
    // floored semantics for negative values
    CHECK(residue_mod_power(-1, 2, 3) == 7);
    CHECK(residue_mod_power(-9, 3, 2) == 0);
    CHECK_THROWS_AS(residue_mod_power(5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(residue_mod_power(5, 2, 0), std::invalid_argument);
}

TEST_CASE("to_digits produces fixed-width base-p digits, most significant first") {
    DigitVec d = to_digits(8, 3, 2);
    REQUIRE(d.width() == 2);
    CHECK(d.digits == std::vector<Int>{2, 2});

    d = to_digits(12, 2, 4);
    CHECK(d.digits == std::vector<Int>{1, 1, 0, 0});

    d = to_digits(0, 5, 3);
    CHECK(d.digits == std::vector<Int>{0, 0, 0});

    CHECK_THROWS_AS(to_digits(9, 3, 2), std::overflow_error);
    CHECK_THROWS_AS(to_digits(-1, 3, 2), std::invalid_argument);
}

TEST_CASE("digit round trip") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        Int p = 2 + rng() % 7;
        Int width = 1 + rng() % 8;
        Int m = Int(rng()) % ipow(p, width);
        DigitVec d = to_digits(m, p, width);
        REQUIRE(d.width() == to_size(width));
        CHECK(from_digits(d) == m);
    }
}

TEST_CASE("from_digits rejects digits outside the base") {
    DigitVec d;
    d.base = 3;
    d.digits = {1, 3};
    CHECK_THROWS_AS(from_digits(d), std::invalid_argument);
}

TEST_CASE("digit_sum") {
    CHECK(digit_sum(8, 3) == 4);    // 22 base 3
    CHECK(digit_sum(12, 2) == 2);   // 1100 base 2
    CHECK(digit_sum(0, 7) == 0);
    CHECK(digit_sum(91, 2) == 5);   // 1011011
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Int p = 2 + rng() % 5;
        Int m = rng() % 100000;
        DigitVec d = to_digits(m, p, 32);
        Int total = 0;
        for (const Int& x : d.digits) total += x;
        CHECK(digit_sum(m, p) == total);
    }
}

TEST_CASE("p_valuation") {
    CHECK(p_valuation(8, 2) == 3);
    CHECK(p_valuation(12, 2) == 2);
    CHECK(p_valuation(5, 3) == 0);
    CHECK(p_valuation(54, 3) == 3);
    CHECK_THROWS_AS(p_valuation(0, 2), std::invalid_argument);
}

TEST_CASE("not_op complements against the next power of the base") {
    CHECK(not_op(6, 2) == 2);   // 110 -> 8-6
    CHECK(not_op(5, 3) == 4);   // 12 base 3 -> 9-5
    CHECK(not_op(4, 2) == 4);   // 100 -> 8-4
    CHECK_THROWS_AS(not_op(0, 2), std::invalid_argument);

    // Digit-wise route: complement every digit of the L+1 digit form and
    // add one; must equal the closed form.
    for (Int p : {Int(2), Int(3), Int(5)}) {
        for (Int s = 1; s < 500; ++s) {
            Int width = 1;
            while (ipow(p, width) <= s) ++width;
            DigitVec d = to_digits(s, p, width);
            for (Int& x : d.digits) x = p - 1 - x;
            CHECK(not_op(s, p) == from_digits(d) + 1);
        }
    }
}

TEST_CASE("not_op_extended complements within a fixed width") {
    CHECK(not_op_extended(2, 2, 3) == 6);
    CHECK(not_op_extended(1, 3, 2) == 8);
    CHECK_THROWS_AS(not_op_extended(0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(not_op_extended(8, 2, 3), std::invalid_argument);

    for (Int p : {Int(2), Int(3), Int(5)}) {
        for (Int alpha = 1; alpha <= 6; ++alpha) {
            Int cap = ipow(p, alpha);
            for (Int s = 1; s < cap; ++s) CHECK(s + not_op_extended(s, p, alpha) == cap);
        }
    }
}

TEST_CASE("complement digit sums track the valuation") {
    // digit_sum(p^a - s) = (p-1)(a - v_p(s)) + 1 - digit_sum(s), the
    // entry-count identity behind the bottom-row completion.
    for (Int p : {Int(2), Int(3)}) {
        for (Int alpha = 1; alpha <= 6; ++alpha) {
            Int cap = ipow(p, alpha);
            for (Int s = 1; s < cap; ++s) {
                Int lhs = digit_sum(cap - s, p);
                Int rhs = (p - 1) * (alpha - p_valuation(s, p)) + 1 - digit_sum(s, p);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sylvester sequence") {
    CHECK(sylvester(1) == 2);
    CHECK(sylvester(2) == 3);
    CHECK(sylvester(3) == 7);
    CHECK(sylvester(4) == 43);
    CHECK(sylvester(5) == 1807);
    for (Int i = 1; i <= 10; ++i)
        CHECK(sylvester(i + 1) == sylvester(i) * sylvester(i) - sylvester(i) + 1);
    // The greedy decomposition identity: sum of 1/S_i plus the defect
    // term reproduces 1 exactly.
    Rational total = 0;
    for (Int i = 1; i <= 6; ++i) {
        Rational term(1, sylvester(i));
        term.canonicalize();
        total += term;
    }
    Rational defect(1, sylvester(7) - 1);
    defect.canonicalize();
    CHECK(total + defect == 1);
    CHECK_THROWS_AS(sylvester(0), std::invalid_argument);
}

TEST_CASE("below_sylvester decides d < S_n without forming S_n") {
    for (Int n = 1; n <= 7; ++n) {
        Int s = sylvester(n);
        for (const Int& d : std::vector<Int>{Int(0), Int(1), Int(s - 1), s, Int(s + 1)}) {
            CHECK(below_sylvester(d, n) == (d < s));
        }
    }
    // S_200 has ~2^199 digits; forming it is impossible, comparing is not
    Int big = ipow(10, 500);
    CHECK(below_sylvester(big, 200));
    CHECK_FALSE(below_sylvester(sylvester(6), 6));
    CHECK_THROWS_AS(below_sylvester(1, 0), std::invalid_argument);
}

TEST_CASE("alpha_cap is the largest width below the Sylvester bound") {
    CHECK(alpha_cap(2, 4) == 5);   // 2^5 = 32 < 43 <= 2^6
    CHECK(alpha_cap(3, 3) == 1);   // 3 < 7 <= 9
    CHECK(alpha_cap(2, 1) == 0);   // nothing below 2
    for (Int p : {Int(2), Int(3), Int(5)}) {
        for (Int n = 1; n <= 8; ++n) {
            Int cap = alpha_cap(p, n);
            Int bound = sylvester(n);
            CHECK(ipow(p, cap + 1) >= bound);
            if (cap > 0) CHECK(ipow(p, cap) < bound);
        }
    }
}

TEST_CASE("is_prime agrees with a sieve") {
    std::vector<bool> sieve(2000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < sieve.size(); ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    for (std::size_t i = 0; i < sieve.size(); ++i) CHECK(is_prime(Int(i)) == sieve[i]);
    CHECK_FALSE(is_prime(-7));
    CHECK(is_prime(Int("1000000007")));
}

TEST_CASE("ipow and floored division helpers") {
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(7, 0) == 1);
    CHECK_THROWS_AS(ipow(2, -1), std::invalid_argument);
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_mod(-7, 2) == 1);
    CHECK(floor_div(-1, 8) == -1);
    CHECK(floor_mod(-1, 8) == 7);
}
