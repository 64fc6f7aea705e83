#pragma once

// Structured verdicts for every congruence claim: the main supercongruence,
// each labeled intermediate step of its proof, the harmonic-number lemma,
// and the related binomial-sum results. Each check is a pure function of
// (p, a) and its auxiliary indices.

#include <cstdint>
#include <optional>
#include <string>

#include "binom.hpp"
#include "residue.hpp"

namespace supercong {

enum class ClaimId {
    main_theorem,
    sun_half,
    tail_vanishing,
    wilson_complement,
    ratio_unity,
    harmonic_lemma,
    key_zero_sum,
    adamchuk,
    sun2011,
    pan_sun,
    mao_sun,
    conjecture_explore,
};

constexpr int kClaimCount = 12;

const char *claim_name(ClaimId c);
std::optional<ClaimId> claim_from_name(const std::string &name);

// required exponent r: the claim asserts lhs == rhs (mod p^r); 0 for the
// evidence-only explorer
uint32_t required_exponent(ClaimId c);

enum class VerdictStatus { pass, fail, inconclusive, evidence };
const char *status_name(VerdictStatus s);

struct Verdict {
    ClaimId claim;
    uint64_t p = 0;
    uint32_t a = 1;
    std::string aux;
    uint64_t lhs = 0;
    uint64_t rhs = 0;
    uint64_t modulus = 0;
    // v_p(lhs - rhs) capped at the required exponent; the raw observed
    // valuation (capped at 4) for the explorer
    int32_t diff_valuation = 0;
    VerdictStatus status = VerdictStatus::fail;
    uint32_t precision = 0;

    bool passed() const { return status == VerdictStatus::pass; }
};

// does (p, a) satisfy the claim's hypothesis? (used by sweeps to skip
// rather than reject)
bool claim_applicable(ClaimId c, uint64_t p, uint32_t a);

// Theorem: sum_{k<=floor(5 p^a/6)} C(2k,k)/16^k == (3/p^a) (mod p^2),
// p == 1 (mod 3)
Verdict check_main_theorem(uint64_t p, uint32_t a, uint32_t precision = 0);

// sum_{k<=(p^a-1)/2} C(2k,k)/16^k == (3/p^a) (mod p^2), any odd p
Verdict check_sun_half(uint64_t p, uint32_t a, uint32_t precision = 0);

// sum over the tail (p^a+1)/2 <= k <= floor(5 p^a/6) == 0 (mod p^2)
Verdict check_tail_vanishing(uint64_t p, uint32_t a, uint32_t precision = 0);

// for k + l = p^a, 0 < l < p^a/2:
//   (l/2) C(2l,l) != 0 (mod p^a)  and  C(2k,k) == -2 p^a/(l C(2l,l)) (mod p^2)
Verdict check_wilson_complement(uint64_t p, uint32_t a, uint64_t l,
                                uint32_t precision = 0);
// the same claim for every l in (0, p^a/2), aggregated
Verdict check_wilson_complement_all(uint64_t p, uint32_t a,
                                    uint32_t precision = 0);

// C((p^a-1)/2, k) / (C(2k,k)/(-4)^k) == 1 (mod p)
Verdict check_ratio_unity(uint64_t p, uint32_t a, uint64_t k,
                          uint32_t precision = 0);
Verdict check_ratio_unity_all(uint64_t p, uint32_t a,
                              uint32_t precision = 0);

// H_{floor(p/2)} == -2 q_p(2), H_{floor(p/3)} == -(3/2) q_p(3),
// H_{floor(p/6)} == -2 q_p(2) - (3/2) q_p(3)   (mod p), p > 3
Verdict check_harmonic_lemma(uint64_t p);

// p^(a-1) sum_{j != m} C(n,j)/((j-m)(-4)^j) == 0 (mod p) with
// n = (p^a-1)/2, m = (p^a-1)/6; also reports C(n,m) != 0 (mod p)
Verdict check_key_zero_sum(uint64_t p, uint32_t a, uint32_t precision = 0);

// the four related results of the introduction
Verdict check_related(uint64_t p, uint32_t a, ClaimId which,
                      uint32_t precision = 0);

// evidence for the conjectural branch: the observed valuation of
// sum_{k<=floor(5 p^a/6)} C(2k,k)/16^k - (3/p^a), capped at 4; never
// pass/fail
Verdict explore_valuation(uint64_t p, uint32_t a, uint32_t precision = 0);

// dispatcher used by sweeps and the C API
Verdict run_check(ClaimId c, uint64_t p, uint32_t a, uint32_t precision = 0);

// proof-chain invariants used by the test suites:
// p^(a-1) H_n == H_{(p-1)/2}, p^(a-1) H_m == H_{floor(p/6)},
// p^(a-1) H_{n-m} == H_{floor(p/3)}  (mod p)
bool scaled_harmonic_chain_holds(uint64_t p, uint32_t a);
// p^(a-1) sum_{k=1}^{n} C(n,k)(-4)^k/k == 0 (mod p) at precision a+1
bool eq_pa1n_holds(uint64_t p, uint32_t a);

} // namespace supercong
