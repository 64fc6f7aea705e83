#include <doctest.h>

#include <numeric>
#include <random>

#include "bigrat.hpp"
#include "errors.hpp"
#include "padic.hpp"
#include "primes.hpp"
#include "residue.hpp"

using namespace supercong;

TEST_CASE("mod_pow basics") {
    for (int64_t x : {0, 1, 2, 7, -3, 1000})
        for (uint64_t m : {2ull, 25ull, 49ull, 1000003ull})
            CHECK(mod_pow(x, 0, m).value() == 1 % m);
    CHECK(mod_pow(2, 4, 25).value() == 16);
    CHECK(mod_pow(3, 3, 7).value() == 6);
    CHECK(mod_pow(-1, 3, 7).value() == 6);
    CHECK(mod_pow(2, 64, 1000000007).value() ==
          pow_mod(pow_mod(2, 32, 1000000007), 2, 1000000007));
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::invalid_argument);
}

TEST_CASE("mod_inv examples and sampled inverse property") {
    CHECK(mod_inv(1, 97).value() == 1);
    CHECK(mod_inv(2, 25).value() == 13);
    CHECK(mod_inv(16, 49).value() == 46);
    CHECK_THROWS_AS(mod_inv(6, 9), not_invertible_error);
    CHECK_THROWS_AS(mod_inv(0, 7), not_invertible_error);

    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 2000; ++i) {
        uint64_t m = 2 + rng() % 1000000;
        uint64_t x = rng() % m;
        if (std::gcd(x, m) != 1) continue;
        CHECK(mul_mod(mod_inv(static_cast<int64_t>(x), m).value(), x, m) ==
              1 % m);
    }
}

TEST_CASE("Residue canonical range and mixed-modulus rejection") {
    CHECK(Residue(-3, 7).value() == 4);
    CHECK(Residue(-7, 7).value() == 0);
    Residue a(5, 7), b(4, 7);
    CHECK((a * b).value() == 6);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((-a).value() == 2);
    CHECK(a.inv().value() == 3);
    CHECK(a.pow(3).value() == 6);
    Residue c(1, 11);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("jacobi symbol spot values and conventions") {
    for (uint64_t n : {1ull, 3ull, 9ull, 15ull, 10001ull})
        CHECK(jacobi_symbol(1, n) == 1);
    CHECK(jacobi_symbol(5, 1) == 1); // empty product
    CHECK(jacobi_symbol(3, 25) == 1);
    CHECK(jacobi_symbol(3, 7) == -1);
    CHECK(jacobi_symbol(2, 5) == -1);
    CHECK(jacobi_symbol(33, 9999) == 0);
    CHECK(jacobi_symbol(34, 9999) == -1);
    CHECK(jacobi_symbol(35, 9999) == 1);
    CHECK(jacobi_symbol(-1, 7) == -1);  // 7 == 3 (mod 4)
    CHECK(jacobi_symbol(-1, 13) == 1);
    CHECK_THROWS_AS(jacobi_symbol(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi agrees with Euler's criterion for all p < 1000") {
    for (uint64_t p : sieve_primes(3, 999)) {
        for (uint64_t a = 0; a < p; ++a) {
            uint64_t euler = pow_mod(a, (p - 1) / 2, p);
            int expected = euler == 0 ? 0 : (euler == 1 ? 1 : -1);
            CHECK(jacobi_symbol(static_cast<int64_t>(a), p) == expected);
        }
    }
}

TEST_CASE("jacobi multiplicative in the denominator, sampled") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        uint64_t m = 2 * (rng() % 500) + 1;
        uint64_t n = 2 * (rng() % 500) + 1;
        int64_t a = static_cast<int64_t>(rng() % 2000) - 1000;
        CHECK(jacobi_symbol(a, m * n) ==
              jacobi_symbol(a, m) * jacobi_symbol(a, n));
    }
}

TEST_CASE("fermat quotient values and logarithm property") {
    for (uint64_t p : {3ull, 5ull, 7ull, 101ull})
        CHECK(fermat_quotient(p, 1).value() == 0);
    CHECK(fermat_quotient(3, 2).value() == 1);
    CHECK(fermat_quotient(5, 2).value() == 3);
    CHECK(fermat_quotient(7, 2).value() == 2);
    CHECK(fermat_quotient(7, 3).value() == 6);
    CHECK_THROWS_AS(fermat_quotient(7, 14), std::invalid_argument);
    CHECK_THROWS_AS(fermat_quotient(4, 3), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (uint64_t p : {5ull, 7ull, 13ull, 101ull, 997ull}) {
        for (int i = 0; i < 50; ++i) {
            int64_t b = 1 + static_cast<int64_t>(rng() % 10000);
            int64_t c = 1 + static_cast<int64_t>(rng() % 10000);
            if (b % static_cast<int64_t>(p) == 0 ||
                c % static_cast<int64_t>(p) == 0)
                continue;
            uint64_t qbc = fermat_quotient(p, b * c).value();
            uint64_t qb = fermat_quotient(p, b).value();
            uint64_t qc = fermat_quotient(p, c).value();
            CHECK(qbc == (qb + qc) % p);
        }
    }
}

TEST_CASE("split_valuation canonical form") {
    PAdicApprox x = split_valuation(252, 7, 2);
    CHECK(x.valuation() == 1);
    CHECK(x.unit() == 36);
    PAdicApprox y = split_valuation(10, 5, 1);
    CHECK(y.valuation() == 1);
    CHECK(y.unit() == 2);
    PAdicApprox z = split_valuation(-1, 7, 3);
    CHECK(z.valuation() == 0);
    CHECK(z.unit() == 342);
    CHECK_THROWS_AS(split_valuation(0, 7, 2), std::invalid_argument);
}

TEST_CASE("padic multiply, invert, negate") {
    PAdicApprox a = PAdicApprox::from_unit(2, 1, 5, 2);
    PAdicApprox b = PAdicApprox::from_unit(3, 0, 5, 2);
    PAdicApprox c = a * b;
    CHECK(c.valuation() == 1);
    CHECK(c.unit() == 6);
    PAdicApprox inv = c.inv();
    CHECK(inv.valuation() == -1);
    CHECK((inv * c) == PAdicApprox::one(5, 2));
    CHECK((-a).unit() == 23);
    CHECK_THROWS_AS(PAdicApprox::zero(5, 2).inv(), not_invertible_error);
    CHECK_THROWS_AS(a * PAdicApprox::one(7, 2), std::invalid_argument);
    CHECK_THROWS_AS(PAdicApprox::from_unit(10, 0, 5, 2),
                    std::invalid_argument);
}

TEST_CASE("padic addition tracks cancellation") {
    // 25 + 24 = 49 = 1 * 7^2: representative splits fully, nothing certain
    PAdicApprox s = split_valuation(25, 7, 2) + split_valuation(24, 7, 2);
    CHECK(s.valuation() == 2);
    CHECK(s.unit() == 1);
    CHECK(s.guaranteed() <= 0);
    CHECK(s.is_effectively_zero());
    CHECK(s.to_residue(2).value() == 0);

    // x + (-x) vanishes at working precision
    PAdicApprox z = split_valuation(1, 7, 2) + split_valuation(48, 7, 2);
    CHECK(z.is_effectively_zero());

    // partial cancellation keeps a certified unit digit
    PAdicApprox t = split_valuation(25, 7, 2) + split_valuation(10, 7, 2);
    CHECK(t.valuation() == 1);
    CHECK(t.unit() == 5);
    CHECK(t.guaranteed() == 1);
    CHECK(t.to_residue(1).value() == 0);
    CHECK(t.to_residue(2).value() == 35);

    // exact zero element is the additive identity
    PAdicApprox x = split_valuation(6, 5, 3);
    CHECK((PAdicApprox::zero(5, 3) + x) == x);
}

TEST_CASE("precision exhaustion is an explicit error") {
    // one certified digit left, shifted down: demanding two must throw
    PAdicApprox t = split_valuation(25, 7, 2) + split_valuation(10, 7, 2);
    PAdicApprox w = t.mul_ppow(-1);
    CHECK(w.valuation() == 0);
    CHECK(w.to_residue(1).value() == 5);
    CHECK_THROWS_AS(w.to_residue(2), precision_exhausted_error);

    PAdicApprox gone = split_valuation(25, 7, 2) + split_valuation(24, 7, 2);
    CHECK_THROWS_AS(gone.inv(), precision_exhausted_error);
    CHECK(gone.valuation_capped(2) == 2);
    CHECK_THROWS_AS(gone.mul_ppow(-1).valuation_capped(2),
                    precision_exhausted_error);
    CHECK(split_valuation(49, 7, 2).valuation_capped(2) == 2);
    CHECK(split_valuation(7, 7, 2).valuation_capped(2) == 1);
}

TEST_CASE("padic arithmetic round-trips against exact integers") {
    std::mt19937_64 rng(20260810);
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        const uint32_t e = 3;
        uint64_t pe = checked_pow(p, e);
        for (int i = 0; i < 400; ++i) {
            int64_t x = static_cast<int64_t>(rng() % 2000001) - 1000000;
            int64_t y = static_cast<int64_t>(rng() % 2000001) - 1000000;
            if (x == 0 || y == 0) continue;
            PAdicApprox px = split_valuation(x, p, e);
            PAdicApprox py = split_valuation(y, p, e);
            CHECK((px * py) == split_valuation(x * y, p, e));
            PAdicApprox s = px + py;
            if (x + y == 0) {
                CHECK(s.is_effectively_zero());
            } else {
                PAdicApprox w = split_valuation(x + y, p, e);
                CHECK(s.to_residue(e).value() ==
                      w.to_residue(e).value());
                if (s.guaranteed() >= 1)
                    CHECK(s.valuation() == w.valuation());
            }
            (void)pe;
        }
    }
}

TEST_CASE("padic quotient arithmetic agrees with exact rationals") {
    // the strongest check on the division-heavy paths: random rational
    // expressions evaluated p-adically must reduce like the exact value
    std::mt19937_64 rng(314159);
    for (uint64_t p : {3ull, 7ull, 13ull}) {
        const uint32_t e = 4;
        for (int i = 0; i < 300; ++i) {
            int64_t n1 = static_cast<int64_t>(rng() % 4001) - 2000;
            int64_t d1 = 1 + static_cast<int64_t>(rng() % 2000);
            int64_t n2 = static_cast<int64_t>(rng() % 4001) - 2000;
            int64_t d2 = 1 + static_cast<int64_t>(rng() % 2000);
            if (n1 == 0 || n2 == 0) continue;
            PAdicApprox x =
                split_valuation(n1, p, e) * split_valuation(d1, p, e).inv();
            PAdicApprox y =
                split_valuation(n2, p, e) * split_valuation(d2, p, e).inv();
            BigRational rx(n1, d1), ry(n2, d2);

            BigRational prod = rx * ry;
            PAdicApprox xy = x * y;
            if (rat_valuation(prod, p) >= 0)
                CHECK(xy.to_residue(e) == rat_to_residue(prod, p, e));

            BigRational sum = rx + ry;
            PAdicApprox s = x + y;
            if (sum == 0) {
                CHECK(s.is_effectively_zero());
            } else if (rat_valuation(sum, p) >= 0 &&
                       s.absolute() >= static_cast<int64_t>(e)) {
                CHECK(s.to_residue(e) == rat_to_residue(sum, p, e));
            } else if (rat_valuation(sum, p) >= 0 && s.absolute() >= 1) {
                uint32_t r = static_cast<uint32_t>(s.absolute());
                CHECK(s.to_residue(r) == rat_to_residue(sum, p, r));
            }
        }
    }
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK(is_prime(9973));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9999));
    CHECK(is_prime(2147483647ull));
    CHECK(!is_prime(2147483647ull * 3));
}
