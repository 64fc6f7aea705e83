#include "binom.hpp"

#include <stdexcept>
#include <string>

namespace supercong {

PrimePowerCtx::PrimePowerCtx(uint64_t p_, uint32_t a_,
                             uint32_t precision_override)
    : p(p_), a(a_) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("PrimePowerCtx: p must be an odd prime");
    if (a < 1) throw std::invalid_argument("PrimePowerCtx: a must be >= 1");
    e = precision_override ? precision_override
                           : std::max<uint32_t>(2, a + 1);
    q = checked_pow(p, a);
    pe = checked_pow(p, e);
    n = (q - 1) / 2;
    m = q / 6;
    // upper-bound convention: (p^a-1)/2 < floor(5 p^a/6) < p^a
    uint64_t top = static_cast<uint64_t>(
        static_cast<unsigned __int128>(5) * q / 6);
    if (!(n < top && top < q))
        throw std::logic_error("PrimePowerCtx: bound convention violated");
}

uint64_t factorial_p_removed(uint64_t n, uint64_t p, uint32_t e) {
    uint64_t pe = checked_pow(p, e);
    uint64_t blocks = n / pe;
    uint64_t rem = n % pe;
    // full block of units multiplies to -1 (odd p)
    uint64_t res = (blocks % 2 == 1) ? pe - 1 : 1;
    for (uint64_t i = 2; i <= rem; ++i) {
        if (i % p == 0) continue;
        res = mul_mod(res, i, pe);
    }
    return res;
}

namespace {
// base-p digits of x, least significant first
std::vector<uint64_t> digits_base_p(uint64_t x, uint64_t p) {
    std::vector<uint64_t> d;
    while (x) {
        d.push_back(x % p);
        x /= p;
    }
    if (d.empty()) d.push_back(0);
    return d;
}

// C(n, k) mod p for n, k < p
uint64_t small_binom_mod_p(uint64_t n, uint64_t k, uint64_t p) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t num = 1, den = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        num = mul_mod(num, (n - k + i) % p, p);
        den = mul_mod(den, i % p, p);
    }
    return num == 0 ? 0 : mul_mod(num, inv_mod(den, p), p);
}

// sum of floor(x / p^i) over i >= 1 (Legendre)
int64_t legendre_valuation(uint64_t x, uint64_t p) {
    int64_t v = 0;
    while (x) {
        x /= p;
        v += static_cast<int64_t>(x);
    }
    return v;
}

// unit part of x! mod p^e: product over levels of p-removed factorials
uint64_t factorial_unit(uint64_t x, uint64_t p, uint32_t e, uint64_t pe) {
    uint64_t u = 1;
    while (x) {
        u = mul_mod(u, factorial_p_removed(x, p, e), pe);
        x /= p;
    }
    return u;
}
} // namespace

Residue binom_lucas(uint64_t n, uint64_t k, uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("binom_lucas: p must be an odd prime");
    auto nd = digits_base_p(n, p);
    auto kd = digits_base_p(k, p);
    uint64_t r = 1;
    for (size_t i = 0; i < kd.size() || i < nd.size(); ++i) {
        uint64_t ni = i < nd.size() ? nd[i] : 0;
        uint64_t ki = i < kd.size() ? kd[i] : 0;
        if (ki > ni) return Residue(0, p);
        r = mul_mod(r, small_binom_mod_p(ni, ki, p), p);
    }
    return Residue(static_cast<int64_t>(r), p);
}

PAdicApprox binom_prime_power(uint64_t n, uint64_t k, uint64_t p,
                              uint32_t e) {
    if (k > n)
        throw std::invalid_argument("binom_prime_power: k > n");
    uint64_t pe = checked_pow(p, e);
    int64_t v = legendre_valuation(n, p) - legendre_valuation(k, p) -
                legendre_valuation(n - k, p);
    uint64_t u = factorial_unit(n, p, e, pe);
    uint64_t d = mul_mod(factorial_unit(k, p, e, pe),
                         factorial_unit(n - k, p, e, pe), pe);
    u = mul_mod(u, inv_mod(d, pe), pe);
    return PAdicApprox::from_unit(u, v, p, e);
}

CentralBinomStream::CentralBinomStream(uint64_t p, uint32_t e)
    : p_(p), e_(e), k_(0), cur_(PAdicApprox::one(p, e)) {}

CentralBinomStream CentralBinomStream::at(uint64_t k, uint64_t p,
                                          uint32_t e) {
    CentralBinomStream s(p, e);
    s.k_ = k;
    s.cur_ = binom_prime_power(2 * k, k, p, e);
    return s;
}

void CentralBinomStream::advance() {
    ++k_;
    uint64_t num = 2 * (2 * k_ - 1);
    cur_ = cur_ * split_valuation(static_cast<int64_t>(num), p_, e_) *
           split_valuation(static_cast<int64_t>(k_), p_, e_).inv();
}

void CentralBinomStream::retreat() {
    if (k_ == 0)
        throw std::invalid_argument("CentralBinomStream: retreat below 0");
    uint64_t num = 2 * (2 * k_ - 1);
    cur_ = cur_ * split_valuation(static_cast<int64_t>(k_), p_, e_) *
           split_valuation(static_cast<int64_t>(num), p_, e_).inv();
    --k_;
}

BinomRowStream::BinomRowStream(uint64_t n, uint64_t p, uint32_t e)
    : n_(n), p_(p), e_(e), j_(0), cur_(PAdicApprox::one(p, e)) {}

void BinomRowStream::advance() {
    if (j_ >= n_)
        throw std::invalid_argument("BinomRowStream: advance past n");
    ++j_;
    cur_ = cur_ *
           split_valuation(static_cast<int64_t>(n_ - j_ + 1), p_, e_) *
           split_valuation(static_cast<int64_t>(j_), p_, e_).inv();
}

uint64_t harmonic_mod(uint64_t n, uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("harmonic_mod: p must be an odd prime");
    if (n >= p)
        throw std::invalid_argument(
            "harmonic_mod: n >= p has non-invertible terms");
    if (n == 0) return 0;
    // inverse table: inv[k] = -(p/k) * inv[p mod k], valid for prime p
    std::vector<uint64_t> inv(n + 1);
    inv[1] = 1;
    uint64_t h = 1;
    for (uint64_t k = 2; k <= n; ++k) {
        inv[k] = mul_mod(p - p / k, inv[p % k], p);
        h += inv[k];
        if (h >= p) h -= p;
    }
    return h;
}

uint64_t scaled_harmonic(uint64_t n, uint64_t p, uint32_t a) {
    uint64_t q = checked_pow(p, a);
    if (n >= q)
        throw std::invalid_argument("scaled_harmonic: n >= p^a");
    // only k = j * p^(a-1) with p !| j contribute mod p, and j stays < p
    uint64_t shift = checked_pow(p, a - 1);
    return harmonic_mod(n / shift, p);
}

Residue weighted_central_sum_range(const PrimePowerCtx &ctx, uint64_t kmin,
                                   uint64_t kmax, int64_t weight_num,
                                   int64_t weight_den, int power) {
    if (power != 1 && power != 2)
        throw std::invalid_argument("weighted_central_sum: power must be 1 or 2");
    uint64_t pe = ctx.pe;
    uint64_t wn = reduce_signed(weight_num, pe);
    uint64_t wd = reduce_signed(weight_den, pe);
    if (wn % ctx.p == 0 || wd % ctx.p == 0)
        throw std::invalid_argument(
            "weighted_central_sum: weight must be a p-unit");
    uint64_t wstep = mul_mod(wn, inv_mod(wd, pe), pe);

    CentralBinomStream stream(ctx.p, ctx.e);
    uint64_t acc = 0;
    uint64_t wpow = 1;
    for (uint64_t k = 0; k <= kmax; ++k) {
        if (k > 0) {
            stream.advance();
            wpow = mul_mod(wpow, wstep, pe);
        }
        if (k < kmin) continue;
        uint64_t c = stream.current().to_residue(ctx.e).value();
        if (power == 2) c = mul_mod(c, c, pe);
        acc = (acc + mul_mod(c, wpow, pe)) % pe;
    }
    return Residue(static_cast<int64_t>(acc), pe);
}

Residue weighted_central_sum(const PrimePowerCtx &ctx, uint64_t bound_num,
                             uint64_t bound_den, int64_t weight_num,
                             int64_t weight_den, int power) {
    if (bound_den == 0 || bound_num > bound_den)
        throw std::invalid_argument(
            "weighted_central_sum: bound must be a fraction <= 1");
    uint64_t kmax = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(bound_num) * ctx.q) / bound_den);
    return weighted_central_sum_range(ctx, 0, kmax, weight_num, weight_den,
                                      power);
}

} // namespace supercong
