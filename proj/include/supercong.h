/* supercong — C API for the central-binomial supercongruence verifier.
 *
 * The library certifies, by exact modular arithmetic, congruences of the
 * shape
 *
 *     sum_{k=0}^{floor(5 p^a / 6)} binom(2k,k) / 16^k  ==  (3 / p^a)   (mod p^2)
 *
 * for primes p == 1 (mod 3), together with the intermediate congruences
 * used in their proof and several related binomial-sum results. All
 * computation is exact; every verdict carries both sides of the claimed
 * congruence and the p-adic valuation of their difference.
 *
 * All handles are opaque. Functions return sc_status; SC_OK means the out
 * parameters are valid. Strings returned through char** are heap-allocated
 * and must be released with sc_string_free().
 */
#ifndef SUPERCONG_H
#define SUPERCONG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_ARG = 1,            /* invalid argument or configuration */
    SC_ERR_NOT_INVERTIBLE = 2, /* gcd(x, modulus) > 1 */
    SC_ERR_PRECISION = 3,      /* p-adic precision exhausted */
    SC_ERR_HYPOTHESIS = 4,     /* claim's hypothesis on (p, a) not met */
    SC_ERR_OVERFLOW = 5,       /* p^e does not fit in 63 bits */
    SC_ERR_STATE = 6,          /* handle used out of order */
    SC_ERR_NOMEM = 7
} sc_status;

const char *sc_status_name(sc_status s);

/* ---- scalar operations ------------------------------------------------ */

/* base^exp mod modulus (modulus >= 2; negative base reduced first) */
sc_status sc_mod_pow(int64_t base, uint64_t exp, uint64_t modulus,
                     uint64_t *out);

/* multiplicative inverse mod modulus; SC_ERR_NOT_INVERTIBLE if none */
sc_status sc_mod_inv(int64_t x, uint64_t modulus, uint64_t *out);

/* Jacobi symbol (a/n); n must be odd and positive; out in {-1, 0, 1} */
sc_status sc_jacobi(int64_t a, uint64_t n, int32_t *out);

/* Fermat quotient q_p(b) = (b^(p-1) - 1)/p mod p for odd prime p, p !| b */
sc_status sc_fermat_quotient(uint64_t p, int64_t b, uint64_t *out);

/* ---- single-claim verdicts -------------------------------------------- */

/* Claim names: main_theorem, sun_half, tail_vanishing, wilson_complement,
 * ratio_unity, harmonic_lemma, key_zero_sum, adamchuk, sun2011, pan_sun,
 * mao_sun, conjecture_explore.
 *
 * precision = 0 selects the claim's natural working precision. */
typedef struct sc_verdict sc_verdict;

sc_status sc_check(const char *claim, uint64_t p, uint32_t a,
                   uint32_t precision, sc_verdict **out);
void sc_verdict_free(sc_verdict *v);

int32_t sc_verdict_pass(const sc_verdict *v); /* 1 pass, 0 otherwise */
const char *sc_verdict_status(const sc_verdict *v);
uint64_t sc_verdict_lhs(const sc_verdict *v);
uint64_t sc_verdict_rhs(const sc_verdict *v);
uint64_t sc_verdict_modulus(const sc_verdict *v);
int32_t sc_verdict_diff_valuation(const sc_verdict *v);
const char *sc_verdict_aux(const sc_verdict *v);

/* ---- prime sweeps ------------------------------------------------------ */

typedef struct sc_scan sc_scan;

sc_scan *sc_scan_new(void);
void sc_scan_free(sc_scan *s);

sc_status sc_scan_set_prime_range(sc_scan *s, uint64_t pmin, uint64_t pmax);
sc_status sc_scan_set_exponents(sc_scan *s, const uint32_t *a, size_t count);
/* comma-separated claim names, e.g. "main_theorem,sun_half" */
sc_status sc_scan_set_claims(sc_scan *s, const char *claims);
sc_status sc_scan_set_jobs(sc_scan *s, uint32_t jobs); /* 0 = all cores */
sc_status sc_scan_set_precision(sc_scan *s, uint32_t e); /* 0 = default */
typedef void (*sc_progress_fn)(uint64_t done, uint64_t total, void *user);
sc_status sc_scan_set_progress(sc_scan *s, sc_progress_fn cb, void *user);

sc_status sc_scan_run(sc_scan *s);

sc_status sc_scan_counts(const sc_scan *s, uint64_t *pass, uint64_t *fail,
                         uint64_t *inconclusive, uint64_t *evidence,
                         uint64_t *skipped);
/* format: "human", "json_lines" or "csv" */
sc_status sc_scan_emit(const sc_scan *s, const char *format, char **out);
/* 0 = all pass, 1 = any fail or inconclusive */
int32_t sc_scan_exit_code(const sc_scan *s);

/* ---- exact-rational identity sweep ------------------------------------ */

sc_status sc_identities_run(uint32_t n_max, const char *format, char **out,
                            uint64_t *checked, uint64_t *failed);

/* ---- built-in spot-value selftest -------------------------------------- */

sc_status sc_selftest_run(const char *format, char **out, uint64_t *total,
                          uint64_t *failed);

void sc_string_free(char *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUPERCONG_H */
