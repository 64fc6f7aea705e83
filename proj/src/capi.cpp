// extern "C" surface over the C++ core. Exceptions are translated to
// status codes at this boundary; no exception escapes.

#include "supercong.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "errors.hpp"
#include "identity_sweep.hpp"
#include "residue.hpp"
#include "scan.hpp"
#include "selftest.hpp"

using namespace supercong;

extern "C" {

struct sc_verdict {
    Verdict v;
};

struct sc_scan {
    ScanConfig config;
    ScanResult result;
    bool ran = false;
    sc_progress_fn progress = nullptr;
    void *progress_user = nullptr;
};

} // extern "C"

namespace {

sc_status translate() {
    try {
        throw;
    } catch (const not_invertible_error &) {
        return SC_ERR_NOT_INVERTIBLE;
    } catch (const precision_exhausted_error &) {
        return SC_ERR_PRECISION;
    } catch (const hypothesis_error &) {
        return SC_ERR_HYPOTHESIS;
    } catch (const modulus_overflow_error &) {
        return SC_ERR_OVERFLOW;
    } catch (const std::bad_alloc &) {
        return SC_ERR_NOMEM;
    } catch (const std::exception &) {
        return SC_ERR_ARG;
    }
}

template <typename F> sc_status guarded(F &&f) {
    try {
        f();
        return SC_OK;
    } catch (...) {
        return translate();
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sc_status emit_string(const std::string &s, char **out) {
    *out = dup_string(s);
    return *out ? SC_OK : SC_ERR_NOMEM;
}

std::vector<ClaimId> parse_claims(const char *csv) {
    std::vector<ClaimId> claims;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "all") {
            for (int i = 0; i < kClaimCount; ++i)
                claims.push_back(static_cast<ClaimId>(i));
            continue;
        }
        auto id = claim_from_name(tok);
        if (!id) throw std::invalid_argument("unknown claim: " + tok);
        claims.push_back(*id);
    }
    if (claims.empty()) throw std::invalid_argument("empty claim list");
    return claims;
}

} // namespace

extern "C" {

const char *sc_status_name(sc_status s) {
    switch (s) {
    case SC_OK: return "ok";
    case SC_ERR_ARG: return "invalid argument";
    case SC_ERR_NOT_INVERTIBLE: return "not invertible";
    case SC_ERR_PRECISION: return "precision exhausted";
    case SC_ERR_HYPOTHESIS: return "hypothesis not met";
    case SC_ERR_OVERFLOW: return "modulus overflow";
    case SC_ERR_STATE: return "invalid handle state";
    case SC_ERR_NOMEM: return "out of memory";
    }
    return "unknown status";
}

sc_status sc_mod_pow(int64_t base, uint64_t exp, uint64_t modulus,
                     uint64_t *out) {
    if (!out) return SC_ERR_ARG;
    return guarded([&] { *out = mod_pow(base, exp, modulus).value(); });
}

sc_status sc_mod_inv(int64_t x, uint64_t modulus, uint64_t *out) {
    if (!out) return SC_ERR_ARG;
    return guarded([&] { *out = mod_inv(x, modulus).value(); });
}

sc_status sc_jacobi(int64_t a, uint64_t n, int32_t *out) {
    if (!out) return SC_ERR_ARG;
    return guarded([&] { *out = jacobi_symbol(a, n); });
}

sc_status sc_fermat_quotient(uint64_t p, int64_t b, uint64_t *out) {
    if (!out) return SC_ERR_ARG;
    return guarded([&] { *out = fermat_quotient(p, b).value(); });
}

sc_status sc_check(const char *claim, uint64_t p, uint32_t a,
                   uint32_t precision, sc_verdict **out) {
    if (!claim || !out) return SC_ERR_ARG;
    return guarded([&] {
        auto id = claim_from_name(claim);
        if (!id)
            throw std::invalid_argument(std::string("unknown claim: ") +
                                        claim);
        auto v = new sc_verdict{run_check(*id, p, a, precision)};
        *out = v;
    });
}

void sc_verdict_free(sc_verdict *v) { delete v; }

int32_t sc_verdict_pass(const sc_verdict *v) {
    return v && v->v.passed() ? 1 : 0;
}
const char *sc_verdict_status(const sc_verdict *v) {
    return v ? status_name(v->v.status) : "?";
}
uint64_t sc_verdict_lhs(const sc_verdict *v) { return v ? v->v.lhs : 0; }
uint64_t sc_verdict_rhs(const sc_verdict *v) { return v ? v->v.rhs : 0; }
uint64_t sc_verdict_modulus(const sc_verdict *v) {
    return v ? v->v.modulus : 0;
}
int32_t sc_verdict_diff_valuation(const sc_verdict *v) {
    return v ? v->v.diff_valuation : 0;
}
const char *sc_verdict_aux(const sc_verdict *v) {
    return v ? v->v.aux.c_str() : "";
}

sc_scan *sc_scan_new(void) { return new (std::nothrow) sc_scan(); }

void sc_scan_free(sc_scan *s) { delete s; }

sc_status sc_scan_set_prime_range(sc_scan *s, uint64_t pmin, uint64_t pmax) {
    if (!s) return SC_ERR_ARG;
    if (pmin < 3 || pmin > pmax) return SC_ERR_ARG;
    s->config.p_min = pmin;
    s->config.p_max = pmax;
    return SC_OK;
}

sc_status sc_scan_set_exponents(sc_scan *s, const uint32_t *a, size_t count) {
    if (!s || !a || count == 0) return SC_ERR_ARG;
    for (size_t i = 0; i < count; ++i)
        if (a[i] < 1) return SC_ERR_ARG;
    s->config.a_values.assign(a, a + count);
    return SC_OK;
}

sc_status sc_scan_set_claims(sc_scan *s, const char *claims) {
    if (!s || !claims) return SC_ERR_ARG;
    return guarded([&] { s->config.claims = parse_claims(claims); });
}

sc_status sc_scan_set_jobs(sc_scan *s, uint32_t jobs) {
    if (!s) return SC_ERR_ARG;
    s->config.parallelism = jobs;
    return SC_OK;
}

sc_status sc_scan_set_precision(sc_scan *s, uint32_t e) {
    if (!s) return SC_ERR_ARG;
    s->config.precision_override = e;
    return SC_OK;
}

sc_status sc_scan_set_progress(sc_scan *s, sc_progress_fn cb, void *user) {
    if (!s) return SC_ERR_ARG;
    s->progress = cb;
    s->progress_user = user;
    return SC_OK;
}

sc_status sc_scan_run(sc_scan *s) {
    if (!s) return SC_ERR_ARG;
    return guarded([&] {
        if (s->progress) {
            sc_progress_fn cb = s->progress;
            void *user = s->progress_user;
            s->config.progress = [cb, user](uint64_t done, uint64_t total) {
                cb(done, total, user);
            };
        } else {
            s->config.progress = nullptr;
        }
        s->result = run_scan(s->config);
        s->ran = true;
    });
}

sc_status sc_scan_counts(const sc_scan *s, uint64_t *pass, uint64_t *fail,
                         uint64_t *inconclusive, uint64_t *evidence,
                         uint64_t *skipped) {
    if (!s) return SC_ERR_ARG;
    if (!s->ran) return SC_ERR_STATE;
    const ScanSummary &sum = s->result.summary;
    if (pass) *pass = sum.pass;
    if (fail) *fail = sum.fail;
    if (inconclusive) *inconclusive = sum.inconclusive;
    if (evidence) *evidence = sum.evidence;
    if (skipped) *skipped = sum.skipped;
    return SC_OK;
}

sc_status sc_scan_emit(const sc_scan *s, const char *format, char **out) {
    if (!s || !format || !out) return SC_ERR_ARG;
    if (!s->ran) return SC_ERR_STATE;
    return guarded([&] {
        auto fmt = format_from_name(format);
        if (!fmt)
            throw std::invalid_argument(std::string("unknown format: ") +
                                        format);
        std::ostringstream os;
        emit_report(s->result, *fmt, os);
        if (emit_string(os.str(), out) != SC_OK) throw std::bad_alloc();
    });
}

int32_t sc_scan_exit_code(const sc_scan *s) {
    if (!s || !s->ran) return 2;
    return scan_exit_code(s->result.summary);
}

sc_status sc_identities_run(uint32_t n_max, const char *format, char **out,
                            uint64_t *checked, uint64_t *failed) {
    if (!format || !out) return SC_ERR_ARG;
    return guarded([&] {
        auto fmt = format_from_name(format);
        if (!fmt)
            throw std::invalid_argument(std::string("unknown format: ") +
                                        format);
        IdentitySweepResult result = run_identity_sweep(n_max);
        std::ostringstream os;
        emit_identity_report(result, *fmt, os);
        if (checked) *checked = result.checked();
        if (failed) *failed = result.failed();
        if (emit_string(os.str(), out) != SC_OK) throw std::bad_alloc();
    });
}

sc_status sc_selftest_run(const char *format, char **out, uint64_t *total,
                          uint64_t *failed) {
    if (!format || !out) return SC_ERR_ARG;
    return guarded([&] {
        auto fmt = format_from_name(format);
        if (!fmt)
            throw std::invalid_argument(std::string("unknown format: ") +
                                        format);
        SelftestResult result = run_selftest();
        std::ostringstream os;
        emit_selftest_report(result, *fmt, os);
        if (total) *total = result.cases.size();
        if (failed) *failed = result.failed();
        if (emit_string(os.str(), out) != SC_OK) throw std::bad_alloc();
    });
}

void sc_string_free(char *s) { std::free(s); }

} // extern "C"
