#include <doctest.h>

#include <random>

#include "identity.hpp"

using namespace supercong;

TEST_CASE("swz decomposition examples and rejects") {
    auto a = swz_decomposition(2, 1, BigRational(2));
    CHECK(a.lhs == 2);
    CHECK(a.rhs == 2);
    CHECK(a.equal);
    auto b = swz_decomposition(1, 0, BigRational(5));
    CHECK(b.lhs == 1);
    CHECK(b.equal);
    CHECK(swz_decomposition(6, 2, BigRational(-4)).equal);
    CHECK_THROWS_AS(swz_decomposition(4, 1, BigRational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(swz_decomposition(4, 1, BigRational(-1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(swz_decomposition(4, 4, BigRational(2)),
                    std::invalid_argument);
}

TEST_CASE("swz holds on a randomized lambda sample") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int64_t n = 1 + static_cast<int64_t>(rng() % 10);
        int64_t m = static_cast<int64_t>(rng() % static_cast<uint64_t>(n));
        int64_t num = static_cast<int64_t>(rng() % 13) - 6;
        int64_t den = 1 + static_cast<int64_t>(rng() % 5);
        if (num == 0 || num == -den) continue;
        CHECK(swz_decomposition(n, m, BigRational(num, den)).equal);
    }
}

TEST_CASE("beta sum closed form") {
    auto tiny = beta_sum_closed_form(2, 0, 1);
    CHECK(tiny.lhs == 1);
    CHECK(tiny.equal);
    auto a = beta_sum_closed_form(3, 0, 0);
    CHECK(a.lhs == BigRational(1, 3));
    CHECK(a.equal);
    auto b = beta_sum_closed_form(4, 1, 1);
    CHECK(b.lhs == BigRational(1, 6));
    CHECK(b.equal);
    CHECK_THROWS_AS(beta_sum_closed_form(4, 1, 3), std::invalid_argument);
}

TEST_CASE("hockey stick exhaustively for s <= 20, K <= 60") {
    CHECK(hockey_stick(2, 1).lhs == 3);
    CHECK(hockey_stick(4, 3).lhs == 35);
    for (int64_t s = 1; s <= 20; ++s) {
        CHECK(hockey_stick(s, 0).lhs == 1);
        for (int64_t K = 0; K <= 60; ++K) CHECK(hockey_stick(s, K).equal);
    }
    CHECK_THROWS_AS(hockey_stick(0, 3), std::invalid_argument);
}

TEST_CASE("sigma inverse binomial identity exhaustively for i <= 25") {
    CHECK(sigma_inverse_binom(2, 2).lhs == BigRational(3, 2));
    CHECK(sigma_inverse_binom(3, 3).lhs == BigRational(7, 5));
    for (int64_t i = 2; i <= 25; ++i) {
        CHECK(sigma_inverse_binom(i, 0).lhs == 1);
        for (int64_t N = 0; N <= 60; ++N)
            CHECK(sigma_inverse_binom(i, N).equal);
    }
    CHECK_THROWS_AS(sigma_inverse_binom(1, 5), std::invalid_argument);
}

TEST_CASE("alternating geometric identities") {
    auto one = alt_geometric_identity(1);
    CHECK(one.neg3_sum == -3);
    CHECK(one.alt_binom_sum == -1);
    CHECK(one.all());
    auto two = alt_geometric_identity(2);
    CHECK(two.neg3_sum == BigRational(3, 2));
    CHECK(two.alt_binom_sum == BigRational(-3, 2));
    CHECK(two.all());
    CHECK(alt_geometric_identity(5).all());
    CHECK_THROWS_AS(alt_geometric_identity(0), std::invalid_argument);
}

TEST_CASE("tail identity") {
    auto a = tail_identity(3, 1);
    CHECK(a.lhs == BigRational(-9, 2));
    CHECK(a.rhs == BigRational(-9, 2));
    auto b = tail_identity(1, 0);
    CHECK(b.lhs == -3);
    CHECK(b.equal);
    CHECK(tail_identity(6, 2).equal);
    CHECK_THROWS_AS(tail_identity(3, 3), std::invalid_argument);
}

TEST_CASE("bc decomposition with sub-splits") {
    auto a = bc_decomposition(3, 1);
    CHECK(a.lhs == BigRational(-45, 32));
    CHECK(a.rhs == BigRational(-45, 32));
    CHECK(a.all());
    auto b = bc_decomposition(1, 0);
    CHECK(b.lhs == BigRational(3, 4));
    CHECK(b.all());
    CHECK(bc_decomposition(7, 2).all());
    CHECK_THROWS_AS(bc_decomposition(2, 2), std::invalid_argument);
}

TEST_CASE("binomial ratio transforms") {
    auto a = ratio_transform_checks(3, 2, 0);
    CHECK(a.upper_applicable);
    CHECK(a.upper_ok);
    auto b = ratio_transform_checks(5, 1, 2);
    CHECK(b.lower_applicable);
    CHECK(b.lower_ok);
    // degenerate k = j = m+1: both sides collapse to 1
    auto c = ratio_transform_checks(4, 4, 3);
    CHECK(c.upper_applicable);
    CHECK(c.upper_ok);
    CHECK_THROWS_AS(ratio_transform_checks(3, -1, 0), std::invalid_argument);
}

TEST_CASE("identity lab quick sweep, n <= 12") {
    const std::vector<BigRational> lambdas = {
        BigRational(-4), BigRational(2), BigRational(1, 2),
        BigRational(-3, 2), BigRational(7)};
    for (int64_t n = 1; n <= 12; ++n) {
        CHECK(alt_geometric_identity(n).all());
        for (int64_t m = 0; m < n; ++m) {
            for (const auto &lam : lambdas)
                CHECK(swz_decomposition(n, m, lam).equal);
            for (int64_t k = 0; k <= n - 1 - m; ++k)
                CHECK(beta_sum_closed_form(n, m, k).equal);
            CHECK(tail_identity(n, m).equal);
            CHECK(bc_decomposition(n, m).all());
            CHECK(swz_chain_consistency(n, m));
            for (int64_t j = 0; j <= n; ++j)
                CHECK(ratio_transform_checks(n, j, m).all());
        }
    }
}
