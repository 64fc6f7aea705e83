#include "bigrat.hpp"

#include <stdexcept>

namespace supercong {

BigInt big_binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt big_pow(const BigInt &base, uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigRational rat_pow(const BigRational &base, int64_t exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        return 1 / rat_pow(base, -exp);
    }
    BigRational r = 1, b = base;
    uint64_t e = static_cast<uint64_t>(exp);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigRational harmonic_exact(int64_t n) {
    BigRational h = 0;
    for (int64_t k = 1; k <= n; ++k) h += BigRational(1, k);
    return h;
}

namespace {
int64_t int_valuation(BigInt x, uint64_t p) {
    if (x < 0) x = -x;
    int64_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

uint64_t int_mod(const BigInt &x, uint64_t m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r.convert_to<uint64_t>();
}
} // namespace

int64_t rat_valuation(const BigRational &q, uint64_t p) {
    if (q == 0) throw std::domain_error("rat_valuation: zero");
    return int_valuation(numerator(q), p) - int_valuation(denominator(q), p);
}

Residue rat_to_residue(const BigRational &q, uint64_t p, uint32_t e) {
    uint64_t pe = checked_pow(p, e);
    if (q == 0) return Residue(0, pe);
    BigInt num = numerator(q), den = denominator(q);
    int64_t vn = int_valuation(num, p), vd = int_valuation(den, p);
    int64_t v = vn - vd;
    if (v < 0)
        throw std::domain_error("rat_to_residue: pole at p");
    if (v >= static_cast<int64_t>(e)) return Residue(0, pe);
    for (int64_t i = 0; i < vn; ++i) num /= p;
    for (int64_t i = 0; i < vd; ++i) den /= p;
    uint64_t r = mul_mod(int_mod(num, pe), inv_mod(int_mod(den, pe), pe), pe);
    uint64_t pv = checked_pow(p, static_cast<uint32_t>(v));
    return Residue(static_cast<int64_t>(mul_mod(r, pv, pe)), pe);
}

std::string rat_str(const BigRational &q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace supercong
