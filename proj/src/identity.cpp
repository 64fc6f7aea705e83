#include "identity.hpp"

#include <stdexcept>

namespace supercong {

namespace {
void require(bool ok, const char *what) {
    if (!ok) throw std::invalid_argument(what);
}

BigRational neg4_pow(int64_t k) { return rat_pow(BigRational(-4), k); }

// sum_{j=0}^{m-1} C(m,j) / ((m-j)(-4)^j); empty for m = 0
BigRational lower_corner_sum(int64_t m) {
    BigRational s = 0;
    for (int64_t j = 0; j < m; ++j)
        s += BigRational(big_binomial(m, j)) / (BigRational(m - j) * neg4_pow(j));
    return s;
}
} // namespace

IdentityPair swz_decomposition(int64_t n, int64_t m,
                               const BigRational &lambda) {
    require(n >= 1, "swz_decomposition: n must be positive");
    require(m >= 0 && m < n, "swz_decomposition: need 0 <= m < n");
    require(lambda != 0 && lambda != -1,
            "swz_decomposition: lambda in {0, -1} is degenerate");

    BigRational lhs = 0;
    for (int64_t k = m; k <= n - 1; ++k)
        lhs += rat_pow(lambda, k) / BigRational(big_binomial(n - 1, k));

    BigRational lp1 = lambda + 1;
    BigRational rhs = 0;
    for (int64_t k = 0; k <= n - 1 - m; ++k) {
        BigRational inner = 0;
        for (int64_t i = 0; i <= n - 1 - m - k; ++i) {
            BigRational t = BigRational(big_binomial(n - 1 - m - k, i)) /
                            BigRational(m + i + 1);
            inner += (i % 2 == 0) ? t : -t;
        }
        rhs += rat_pow(lambda, m + k) / rat_pow(lp1, k + 1) * inner;
    }
    rhs *= n;
    BigRational tail = 0;
    for (int64_t k = m; k <= n - 1; ++k)
        tail += rat_pow(lp1, k + 1) / BigRational(k + 1);
    rhs += BigRational(n) * rat_pow(lambda, n) / rat_pow(lp1, n + 1) * tail;

    return {lhs, rhs, lhs == rhs};
}

IdentityPair beta_sum_closed_form(int64_t n, int64_t m, int64_t k) {
    require(m >= 0 && k >= 0 && k <= n - 1 - m,
            "beta_sum_closed_form: need 0 <= k <= n-1-m");
    BigRational lhs = 0;
    for (int64_t i = 0; i <= n - 1 - m - k; ++i) {
        BigRational t = BigRational(big_binomial(n - 1 - m - k, i)) /
                        BigRational(m + i + 1);
        lhs += (i % 2 == 0) ? t : -t;
    }
    BigRational rhs =
        BigRational(1) /
        (BigRational(m + 1) * BigRational(big_binomial(n - k, m + 1)));
    return {lhs, rhs, lhs == rhs};
}

HockeyStick hockey_stick(int64_t s, int64_t K) {
    require(s >= 1, "hockey_stick: s must be positive");
    require(K >= 0, "hockey_stick: K must be nonnegative");
    BigInt lhs = 0;
    for (int64_t k = 0; k <= K; ++k) lhs += big_binomial(k + s - 1, s - 1);
    BigInt rhs = big_binomial(K + s, s);
    return {lhs, rhs, lhs == rhs};
}

IdentityPair sigma_inverse_binom(int64_t i, int64_t N) {
    require(i >= 2, "sigma_inverse_binom: rhs has a pole at i = 1");
    require(N >= 0, "sigma_inverse_binom: N must be nonnegative");
    BigRational lhs = 0;
    for (int64_t k = 0; k <= N; ++k)
        lhs += BigRational(1) / BigRational(big_binomial(k + i, i));
    BigRational rhs = BigRational(i, i - 1) -
                      BigRational(N + 1) / (BigRational(i - 1) *
                                            BigRational(big_binomial(N + i, N)));
    return {lhs, rhs, lhs == rhs};
}

AltGeometric alt_geometric_identity(int64_t n) {
    require(n >= 1, "alt_geometric_identity: n must be positive");
    AltGeometric r;
    r.neg3_sum = 0;
    r.binom_form = 0;
    r.alt_binom_sum = 0;
    BigRational neg4_form = 0; // sum C(n,k)(-4)^k/k
    for (int64_t k = 1; k <= n; ++k) {
        r.neg3_sum += rat_pow(BigRational(-3), k) / BigRational(k);
        BigRational c = BigRational(big_binomial(n, k));
        BigRational sgn = (k % 2 == 0) ? 1 : -1;
        r.binom_form +=
            c * sgn * BigRational(big_pow(4, k) - 1) / BigRational(k);
        r.alt_binom_sum += c * sgn / BigRational(k);
        neg4_form += c * neg4_pow(k) / BigRational(k);
    }
    r.harmonic = harmonic_exact(n);
    r.first_equal = r.neg3_sum == r.binom_form;
    r.second_equal = r.alt_binom_sum == -r.harmonic;
    r.chained_equal = r.neg3_sum == neg4_form + r.harmonic;
    return r;
}

IdentityPair tail_identity(int64_t n, int64_t m) {
    require(n >= 1 && m >= 0 && m < n, "tail_identity: need 0 <= m < n");
    BigRational lhs = 0;
    for (int64_t k = m + 1; k <= n; ++k)
        lhs += rat_pow(BigRational(-3), k) / BigRational(k);
    BigRational rhs = 0;
    for (int64_t k = 1; k <= n; ++k)
        rhs += BigRational(big_binomial(n, k)) * neg4_pow(k) / BigRational(k);
    rhs += harmonic_exact(n);
    rhs -= neg4_pow(m) * lower_corner_sum(m);
    rhs -= harmonic_exact(m);
    return {lhs, rhs, lhs == rhs};
}

BcDecomposition bc_decomposition(int64_t n, int64_t m) {
    require(n >= 1 && m >= 0 && m < n, "bc_decomposition: need 0 <= m < n");
    BcDecomposition r;

    // (3/4)^k is (lambda+1)^k/lambda^k at lambda = -4; the expansion is
    // specific to that value, so lambda is fixed here
    BigRational lam_m = neg4_pow(m);
    r.lhs = 0;
    for (int64_t k = m + 1; k <= n; ++k)
        r.lhs += rat_pow(BigRational(3, 4), k) /
                 BigRational(big_binomial(k, m + 1));
    r.lhs *= lam_m / BigRational(m + 1);

    BigRational mixed = 0; // sum_{j != m} C(n,j)/((j-m)(-4)^j)
    for (int64_t j = 0; j <= n; ++j) {
        if (j == m) continue;
        mixed += BigRational(big_binomial(n, j)) /
                 (BigRational(j - m) * neg4_pow(j));
    }
    r.rhs = lam_m * lower_corner_sum(m) +
            lam_m / BigRational(big_binomial(n, m)) * mixed +
            harmonic_exact(n - m);
    r.equal = r.lhs == r.rhs;

    // B = sum_{j=m+1}^n (-4)^{-j} sum_{k=j}^n C(k,j)/C(k,m+1)
    BigRational b_direct = 0;
    for (int64_t j = m + 1; j <= n; ++j) {
        BigRational inner = 0;
        for (int64_t k = j; k <= n; ++k)
            inner += BigRational(big_binomial(k, j)) /
                     BigRational(big_binomial(k, m + 1));
        b_direct += inner / neg4_pow(j);
    }
    BigRational b_closed = 0;
    for (int64_t j = m + 1; j <= n; ++j)
        b_closed += BigRational(big_binomial(n, j)) /
                    (BigRational(j - m) * neg4_pow(j));
    b_closed *= BigRational(n + 1) / BigRational(big_binomial(n + 1, m + 1));
    r.b_split_ok = b_direct == b_closed;

    // C = sum_{j=0}^m (-4)^{-j} sum_{k=m+1}^n C(k,j)/C(k,m+1)
    BigRational c_direct = 0;
    for (int64_t j = 0; j <= m; ++j) {
        BigRational inner = 0;
        for (int64_t k = m + 1; k <= n; ++k)
            inner += BigRational(big_binomial(k, j)) /
                     BigRational(big_binomial(k, m + 1));
        c_direct += inner / neg4_pow(j);
    }
    BigRational c_closed = BigRational(m + 1) * lower_corner_sum(m);
    BigRational corr = 0;
    for (int64_t j = 0; j < m; ++j)
        corr += BigRational(big_binomial(n, j)) /
                (BigRational(m - j) * neg4_pow(j));
    c_closed -=
        BigRational(n + 1) / BigRational(big_binomial(n + 1, m + 1)) * corr;
    c_closed += BigRational(m + 1) * rat_pow(BigRational(-1, 4), m) *
                harmonic_exact(n - m);
    r.c_split_ok = c_direct == c_closed;

    return r;
}

RatioTransforms ratio_transform_checks(int64_t k, int64_t j, int64_t m) {
    require(m >= 0 && j >= 0, "ratio_transform_checks: negative index");
    RatioTransforms r;

    if (j >= m + 1 && k >= j) {
        // C(k,j)/C(k,m+1) == C(k-m-1, j-m-1)/C(j, m+1)
        r.upper_applicable = true;
        BigRational lhs = BigRational(big_binomial(k, j)) /
                          BigRational(big_binomial(k, m + 1));
        BigRational rhs = BigRational(big_binomial(k - m - 1, j - m - 1)) /
                          BigRational(big_binomial(j, m + 1));
        r.upper_ok = lhs == rhs;
    }
    if (j <= m && k >= m + 1) {
        // C(k,j)/C(k,m+1) == C(m+1,j)/C(k-j, m-j+1)
        r.lower_applicable = true;
        BigRational lhs = BigRational(big_binomial(k, j)) /
                          BigRational(big_binomial(k, m + 1));
        BigRational rhs = BigRational(big_binomial(m + 1, j)) /
                          BigRational(big_binomial(k - j, m - j + 1));
        r.lower_ok = lhs == rhs;
    }
    // the remaining two read the first argument as n
    int64_t n = k;
    if (j >= m + 1 && n >= j) {
        // C(n-m,j-m)/C(j,m+1) == (n+1)/(j-m) * C(n,j)/C(n+1,m+1)
        r.b_step_applicable = true;
        BigRational lhs = BigRational(big_binomial(n - m, j - m)) /
                          BigRational(big_binomial(j, m + 1));
        BigRational rhs = BigRational(n + 1) / BigRational(j - m) *
                          BigRational(big_binomial(n, j)) /
                          BigRational(big_binomial(n + 1, m + 1));
        r.b_step_ok = lhs == rhs;
    }
    if (j <= m && n >= m + 1) {
        // (n-m) C(m+1,j)/C(n-j, n-m-1) == (n+1) C(n,j)/C(n+1,m+1)
        r.c_step_applicable = true;
        BigRational lhs = BigRational(n - m) *
                          BigRational(big_binomial(m + 1, j)) /
                          BigRational(big_binomial(n - j, n - m - 1));
        BigRational rhs = BigRational(n + 1) *
                          BigRational(big_binomial(n, j)) /
                          BigRational(big_binomial(n + 1, m + 1));
        r.c_step_ok = lhs == rhs;
    }
    return r;
}

bool swz_chain_consistency(int64_t n, int64_t m) {
    require(n >= 1 && m >= 0 && m < n, "swz_chain_consistency: 0 <= m < n");
    BigRational lambda = -4, lp1 = -3;

    BigRational direct = 0;
    for (int64_t k = m; k <= n - 1; ++k)
        direct += rat_pow(lambda, k) / BigRational(big_binomial(n - 1, k));

    BigRational harmonic_tail = 0;
    for (int64_t k = m + 1; k <= n; ++k)
        harmonic_tail += rat_pow(lp1, k) / BigRational(k);

    BigRational skeleton = BigRational(n) * rat_pow(lambda, n) /
                           rat_pow(lp1, n + 1) *
                           (bc_decomposition(n, m).lhs + harmonic_tail);
    return direct == skeleton;
}

} // namespace supercong
