#pragma once

// Exact-rational verification of the finite combinatorial identities the
// proof chains together. Everything here is computed over BigRational;
// no congruences, no rounding. These are the non-modular oracles for the
// congruence suite.

#include <cstdint>

#include "bigrat.hpp"

namespace supercong {

struct IdentityPair {
    BigRational lhs;
    BigRational rhs;
    bool equal;
};

// sum_{k=m}^{n-1} lambda^k / C(n-1,k)
//   == n * sum_{k=0}^{n-1-m} lambda^(m+k)/(lambda+1)^(k+1)
//          * sum_i (-1)^i C(n-1-m-k, i)/(m+i+1)
//    + n lambda^n/(lambda+1)^(n+1) * sum_{k=m}^{n-1} (lambda+1)^(k+1)/(k+1)
// for lambda not in {0, -1}, 0 <= m < n
IdentityPair swz_decomposition(int64_t n, int64_t m, const BigRational &lambda);

// sum_{i=0}^{n-1-m-k} (-1)^i C(n-1-m-k, i)/(m+i+1) == 1/((m+1) C(n-k, m+1)),
// the beta-function evaluation in closed form
IdentityPair beta_sum_closed_form(int64_t n, int64_t m, int64_t k);

// sum_{k=0}^{K} C(k+s-1, s-1) == C(K+s, s)
struct HockeyStick {
    BigInt lhs;
    BigInt rhs;
    bool equal;
};
HockeyStick hockey_stick(int64_t s, int64_t K);

// sum_{k=0}^{N} 1/C(k+i, i) == i/(i-1) - (N+1)/((i-1) C(N+i, N)), i >= 2
IdentityPair sigma_inverse_binom(int64_t i, int64_t N);

// the two integral-derived sums and their chained lambda = -4 form:
//   sum (-3)^k/k == sum C(n,k)(-1)^k (4^k-1)/k
//   sum C(n,k)(-1)^k/k == -H_n
//   sum (-3)^k/k == sum C(n,k)(-4)^k/k + H_n
struct AltGeometric {
    BigRational neg3_sum;      // sum_{k=1}^n (-3)^k/k
    BigRational binom_form;    // sum C(n,k)(-1)^k(4^k-1)/k
    BigRational alt_binom_sum; // sum C(n,k)(-1)^k/k
    BigRational harmonic;      // H_n
    bool first_equal;
    bool second_equal;
    bool chained_equal;
    bool all() const { return first_equal && second_equal && chained_equal; }
};
AltGeometric alt_geometric_identity(int64_t n);

// sum_{k=m+1}^n (-3)^k/k == sum_{k=1}^n C(n,k)(-4)^k/k + H_n
//   - (-4)^m sum_{j=0}^{m-1} C(m,j)/((m-j)(-4)^j) - H_m
IdentityPair tail_identity(int64_t n, int64_t m);

// Eq (b+c) with lambda = -4 fixed:
//   (lambda^m/(m+1)) sum_{k=m+1}^n (3/4)^k / C(k, m+1)
//     == lambda^m sum_{j<m} C(m,j)/((m-j)(-4)^j)
//      + (lambda^m/C(n,m)) sum_{j != m} C(n,j)/((j-m)(-4)^j) + H_{n-m},
// with the internal B and C splits verified separately
struct BcDecomposition {
    BigRational lhs;
    BigRational rhs;
    bool equal;
    bool b_split_ok; // B double sum == (n+1)/C(n+1,m+1) closed form
    bool c_split_ok; // C double sum == its closed form
    bool all() const { return equal && b_split_ok && c_split_ok; }
};
BcDecomposition bc_decomposition(int64_t n, int64_t m);

// the four binomial-ratio transforms; a flag is reported only where the
// identity's index constraints hold
struct RatioTransforms {
    bool upper_applicable = false; // j >= m+1: C(k,j)/C(k,m+1) rewrite
    bool upper_ok = true;
    bool lower_applicable = false; // j <= m rewrite
    bool lower_ok = true;
    bool b_step_applicable = false; // C(n-m,j-m)/C(j,m+1) rewrite (k as n)
    bool b_step_ok = true;
    bool c_step_applicable = false; // (n-m)C(m+1,j)/C(n-j,n-m-1) rewrite
    bool c_step_ok = true;
    bool all() const {
        return upper_ok && lower_ok && b_step_ok && c_step_ok;
    }
};
RatioTransforms ratio_transform_checks(int64_t k, int64_t j, int64_t m);

// end-to-end check that the closed pieces reassemble the direct sum:
// sum_{k=m}^{n-1} (-4)^k/C(n-1,k)
//   == n lambda^n/(lambda+1)^(n+1)
//      * (bc lhs + sum_{k=m+1}^n (lambda+1)^k/k),  lambda = -4
bool swz_chain_consistency(int64_t n, int64_t m);

} // namespace supercong
