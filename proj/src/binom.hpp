#pragma once

// Binomial coefficients, central-binomial streams, p-removed factorials and
// harmonic sums modulo prime powers — the raw material of every congruence
// the library certifies.

#include <cstdint>
#include <vector>

#include "padic.hpp"
#include "residue.hpp"

namespace supercong {

// the tuple (p, a) with its derived quantities; n and m are always
// recomputed from (p, a)
struct PrimePowerCtx {
    uint64_t p;
    uint32_t a;
    uint64_t q;  // p^a
    uint64_t n;  // (p^a - 1) / 2
    uint64_t m;  // floor(p^a / 6)
    uint32_t e;  // working precision, default max(2, a + 1)
    uint64_t pe; // p^e

    PrimePowerCtx(uint64_t p, uint32_t a, uint32_t precision_override = 0);
};

// product of the integers in [1, n] coprime to p, mod p^e. Uses the odd-p
// Wilson block product: the units of a full block [1, p^e] multiply to
// -1 mod p^e.
uint64_t factorial_p_removed(uint64_t n, uint64_t p, uint32_t e);

// Lucas' theorem: C(n, k) mod p as the base-p digit product
Residue binom_lucas(uint64_t n, uint64_t k, uint64_t p);

// C(n, k) as unit * p^v mod p^e; valuation by Legendre's formula, unit by
// p-removed factorials. Rejects k > n.
PAdicApprox binom_prime_power(uint64_t n, uint64_t k, uint64_t p, uint32_t e);

// yields C(2k, k) for k = 0, 1, 2, ... as PAdicApprox, advancing through
// C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k with the p-parts split out exactly
class CentralBinomStream {
  public:
    CentralBinomStream(uint64_t p, uint32_t e);
    // positioned at an arbitrary k, seeded from binom_prime_power
    static CentralBinomStream at(uint64_t k, uint64_t p, uint32_t e);
    uint64_t k() const { return k_; }
    const PAdicApprox &current() const { return cur_; }
    void advance();
    // step the index downward: from C(2k,k) to C(2k-2,k-1)
    void retreat();

  private:
    uint64_t p_;
    uint32_t e_;
    uint64_t k_;
    PAdicApprox cur_;
};

// yields C(n, j) for j = 0, 1, ..., n
class BinomRowStream {
  public:
    BinomRowStream(uint64_t n, uint64_t p, uint32_t e);
    uint64_t j() const { return j_; }
    const PAdicApprox &current() const { return cur_; }
    void advance();

  private:
    uint64_t n_, p_;
    uint32_t e_;
    uint64_t j_;
    PAdicApprox cur_;
};

// H_n = sum_{k=1}^{n} 1/k mod p; requires 0 <= n < p
uint64_t harmonic_mod(uint64_t n, uint64_t p);

// p^(a-1) * H_n mod p for n < p^a. Only the indices with v_p(k) = a-1
// survive, so this is H on their unit parts.
uint64_t scaled_harmonic(uint64_t n, uint64_t p, uint32_t a);

// sum_{k=kmin}^{kmax} C(2k,k)^power * (weight_num/weight_den)^k mod p^e
Residue weighted_central_sum_range(const PrimePowerCtx &ctx, uint64_t kmin,
                                   uint64_t kmax, int64_t weight_num,
                                   int64_t weight_den, int power);

// sum_{k=0}^{floor(bound_num * p^a / bound_den)} of the same summand
Residue weighted_central_sum(const PrimePowerCtx &ctx, uint64_t bound_num,
                             uint64_t bound_den, int64_t weight_num,
                             int64_t weight_den, int power);

} // namespace supercong
