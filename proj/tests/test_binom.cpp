#include <doctest.h>

#include <random>
#include <vector>

#include "bigrat.hpp"
#include "binom.hpp"
#include "errors.hpp"
#include "primes.hpp"

using namespace supercong;

namespace {

// independent oracle: carries when adding k and n-k in base p
int carry_count(uint64_t n, uint64_t k, uint64_t p) {
    uint64_t a = k, b = n - k;
    int carries = 0, carry = 0;
    while (a || b || carry) {
        uint64_t s = a % p + b % p + static_cast<uint64_t>(carry);
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

// exact Pascal row n as u64 (safe through n = 64)
std::vector<uint64_t> pascal_row_u64(int n) {
    std::vector<uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<uint64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row;
}

} // namespace

TEST_CASE("PrimePowerCtx derived quantities and bound convention") {
    PrimePowerCtx c71(7, 1);
    CHECK(c71.q == 7);
    CHECK(c71.n == 3);
    CHECK(c71.m == 1);
    CHECK(c71.e == 2);
    PrimePowerCtx c72(7, 2);
    CHECK(c72.q == 49);
    CHECK(c72.n == 24);
    CHECK(c72.m == 8);
    CHECK(c72.e == 3);
    PrimePowerCtx c31(3, 1);
    CHECK(c31.n == 1);
    CHECK(c31.m == 0);
    PrimePowerCtx fine(13, 2, 4);
    CHECK(fine.e == 4);
    CHECK_THROWS_AS(PrimePowerCtx(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerCtx(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerCtx(99991, 5), modulus_overflow_error);
}

TEST_CASE("factorial_p_removed spot values") {
    for (uint64_t p : {3ull, 5ull, 11ull})
        CHECK(factorial_p_removed(0, p, 2) == 1);
    CHECK(factorial_p_removed(6, 5, 1) == 4);   // {1,2,3,4,6} -> 144
    CHECK(factorial_p_removed(10, 3, 2) == 8);  // 22400 mod 9
    // full block multiplies to -1 (odd-p Wilson)
    CHECK(factorial_p_removed(25, 5, 2) == 24);
    CHECK(factorial_p_removed(343, 7, 3) == 342);
}

TEST_CASE("binom_lucas against exact binomials, n <= 60") {
    CHECK(binom_lucas(12, 5, 5).value() == 2);
    CHECK(binom_lucas(3, 1, 7).value() == 3);
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull})
        CHECK(binom_lucas(100, 0, p).value() == 1);

    for (int n = 0; n <= 60; ++n) {
        auto row = pascal_row_u64(n);
        for (int k = 0; k <= n; ++k)
            for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull})
                CHECK(binom_lucas(n, k, p).value() == row[k] % p);
    }
}

TEST_CASE("binom_prime_power: Legendre valuation equals Kummer carries") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull})
        for (uint64_t n = 0; n <= 200; ++n)
            for (uint64_t k = 0; k <= n; ++k)
                CHECK(binom_prime_power(n, k, p, 1).valuation() ==
                      carry_count(n, k, p));
}

TEST_CASE("binom_prime_power: Lucas consistency and exact units") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (uint64_t n = 0; n <= 120; ++n) {
            for (uint64_t k = 0; k <= n; ++k) {
                PAdicApprox b = binom_prime_power(n, k, p, 1);
                uint64_t lucas = binom_lucas(n, k, p).value();
                if (b.valuation() == 0)
                    CHECK(b.unit() == lucas);
                else
                    CHECK(lucas == 0);
            }
        }
    }
    // unit parts against exact 64-bit binomials
    for (int n = 0; n <= 60; ++n) {
        auto row = pascal_row_u64(n);
        for (int k = 0; k <= n; ++k)
            for (uint64_t p : {3ull, 5ull, 7ull})
                for (uint32_t e : {1u, 2u, 3u})
                    CHECK(binom_prime_power(n, k, p, e) ==
                          split_valuation(static_cast<int64_t>(row[k]), p, e));
    }
    CHECK(binom_prime_power(10, 5, 7, 2) == split_valuation(252, 7, 2));
    CHECK(binom_prime_power(4, 2, 5, 1) == split_valuation(6, 5, 1));
    CHECK(binom_prime_power(17, 17, 5, 2) == PAdicApprox::one(5, 2));
    CHECK_THROWS_AS(binom_prime_power(3, 5, 7, 1), std::invalid_argument);
}

TEST_CASE("central binom stream equals binom_prime_power up to k = 200") {
    for (uint64_t p : sieve_primes(3, 50)) {
        for (uint32_t e : {1u, 2u, 3u}) {
            CentralBinomStream s(p, e);
            CHECK(s.current() == PAdicApprox::one(p, e));
            for (uint64_t k = 1; k <= 200; ++k) {
                s.advance();
                CHECK(s.current() == binom_prime_power(2 * k, k, p, e));
            }
        }
    }
}

TEST_CASE("central binom stream equals exactly computed integers") {
    // exact C(2k,k) via cpp_int recurrence, split independently
    for (uint64_t p : sieve_primes(3, 50)) {
        for (uint32_t e : {1u, 2u, 3u}) {
            uint64_t pe = checked_pow(p, e);
            BigInt exact = 1;
            CentralBinomStream s(p, e);
            for (uint64_t k = 1; k <= 200; ++k) {
                exact = exact * 2 * (2 * static_cast<int64_t>(k) - 1) /
                        static_cast<int64_t>(k);
                s.advance();
                BigInt u = exact;
                int64_t v = 0;
                while (u % p == 0) {
                    u /= p;
                    ++v;
                }
                CHECK(s.current().valuation() == v);
                CHECK(s.current().unit() == (u % pe).convert_to<uint64_t>());
            }
        }
    }
}

TEST_CASE("stream retreat and positioned start") {
    CentralBinomStream s = CentralBinomStream::at(48, 7, 3);
    CHECK(s.current() == binom_prime_power(96, 48, 7, 3));
    for (uint64_t k = 48; k > 20; --k) s.retreat();
    CHECK(s.k() == 20);
    CHECK(s.current() == binom_prime_power(40, 20, 7, 3));
    CentralBinomStream zero(5, 2);
    CHECK_THROWS_AS(zero.retreat(), std::invalid_argument);
}

TEST_CASE("binom row stream walks one Pascal row") {
    for (uint64_t p : {5ull, 13ull}) {
        BinomRowStream row(24, p, 3);
        for (uint64_t j = 0; j <= 24; ++j) {
            if (j) row.advance();
            CHECK(row.current() == binom_prime_power(24, j, p, 3));
        }
        CHECK_THROWS_AS(row.advance(), std::invalid_argument);
    }
}

TEST_CASE("harmonic_mod spot values and exact-rational agreement") {
    CHECK(harmonic_mod(0, 7) == 0);
    CHECK(harmonic_mod(2, 5) == 4);
    CHECK(harmonic_mod(3, 7) == 3);
    CHECK_THROWS_AS(harmonic_mod(7, 7), std::invalid_argument);
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull, 97ull})
        for (uint64_t n = 0; n < p; ++n)
            CHECK(harmonic_mod(n, p) ==
                  rat_to_residue(harmonic_exact(static_cast<int64_t>(n)), p, 1)
                      .value());
}

TEST_CASE("scaled_harmonic equals the p-adic definition") {
    CHECK(scaled_harmonic(12, 5, 2) == 4);
    CHECK(scaled_harmonic(4, 5, 2) == 0);
    CHECK_THROWS_AS(scaled_harmonic(25, 5, 2), std::invalid_argument);
    for (uint64_t p : {5ull, 7ull})
        for (uint64_t n = 0; n < p; ++n)
            CHECK(scaled_harmonic(n, p, 1) == harmonic_mod(n, p));

    // oracle: literally accumulate p^(a-1) sum 1/k as a p-adic value
    for (uint64_t p : {5ull, 7ull}) {
        for (uint32_t a : {2u, 3u}) {
            uint64_t q = checked_pow(p, a);
            uint32_t e = a + 1;
            for (uint64_t n :
                 {q / 6, (q - 1) / 2, q - 1, q / 3 + 1, p - 1, q / 2 - 2}) {
                PAdicApprox sum = PAdicApprox::zero(p, e);
                for (uint64_t k = 1; k <= n; ++k)
                    sum = sum +
                          split_valuation(static_cast<int64_t>(k), p, e).inv();
                uint64_t expect =
                    sum.mul_ppow(static_cast<int64_t>(a) - 1)
                        .to_residue(1)
                        .value();
                CHECK(scaled_harmonic(n, p, a) == expect);
            }
        }
    }
}

TEST_CASE("weighted_central_sum spot values") {
    PrimePowerCtx c71(7, 1, 2);
    CHECK(weighted_central_sum(c71, 5, 6, 1, 16, 1).value() == 48);
    PrimePowerCtx c51(5, 1, 2);
    CHECK(weighted_central_sum_range(c51, 0, c51.n, 1, 16, 1).value() == 24);
    PrimePowerCtx c513(5, 1, 3);
    CHECK(weighted_central_sum(c513, 3, 4, 1, 16, 2).value() == 1);
    CHECK_THROWS_AS(weighted_central_sum(c71, 7, 6, 1, 16, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_central_sum(c71, 1, 2, 7, 16, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_central_sum(c71, 1, 2, 1, 16, 3),
                    std::invalid_argument);
}

TEST_CASE("bound 1/2 means (p^a - 1)/2 inclusive") {
    for (uint64_t p : {5ull, 7ull, 13ull}) {
        for (uint32_t a : {1u, 2u}) {
            PrimePowerCtx ctx(p, a);
            CHECK(weighted_central_sum(ctx, 1, 2, 1, 16, 1).value() ==
                  weighted_central_sum_range(ctx, 0, ctx.n, 1, 16, 1)
                      .value());
        }
    }
}

TEST_CASE("weighted sums match term-by-term binom_prime_power totals") {
    std::mt19937_64 rng(5);
    for (uint64_t p : {7ull, 13ull, 43ull, 97ull}) {
        for (uint32_t a : {1u, 2u}) {
            if (a == 2 && p > 43) continue;
            PrimePowerCtx ctx(p, a);
            uint64_t pe = ctx.pe;
            uint64_t w = mul_mod(1, inv_mod(16, pe), pe);
            uint64_t acc = 0, wpow = 1;
            for (uint64_t k = 0; k <= ctx.n; ++k) {
                if (k) wpow = mul_mod(wpow, w, pe);
                uint64_t c =
                    binom_prime_power(2 * k, k, p, ctx.e).to_residue(ctx.e)
                        .value();
                acc = (acc + mul_mod(c, wpow, pe)) % pe;
            }
            CHECK(weighted_central_sum(ctx, 1, 2, 1, 16, 1).value() == acc);
        }
        (void)rng;
    }
}

TEST_CASE("weighted sums match exact rational sums for small primes") {
    for (uint64_t p : {5ull, 7ull, 13ull, 31ull}) {
        PrimePowerCtx ctx(p, 1, 2);
        uint64_t top = 5 * p / 6;
        BigRational exact = 0;
        for (uint64_t k = 0; k <= top; ++k)
            exact += BigRational(big_binomial(2 * static_cast<int64_t>(k),
                                              static_cast<int64_t>(k))) /
                     BigRational(big_pow(16, k));
        CHECK(weighted_central_sum(ctx, 5, 6, 1, 16, 1).value() ==
              rat_to_residue(exact, p, 2).value());
    }
}
