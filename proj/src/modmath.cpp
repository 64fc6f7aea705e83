#include "modmath.hpp"

#include <stdexcept>
#include <string>

namespace supercong {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

uint64_t inv_mod(uint64_t x, uint64_t m) {
    if (m < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
    x %= m;
    // extended Euclid on (m, x); coefficients stay below 2^63 in magnitude
    int64_t t0 = 0, t1 = 1;
    uint64_t r0 = m, r1 = x;
    while (r1 != 0) {
        uint64_t q = r0 / r1;
        uint64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - static_cast<int64_t>(q) * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw not_invertible_error("inv_mod: gcd(" + std::to_string(x) + ", " +
                                   std::to_string(m) + ") != 1");
    return reduce_signed(t0, m);
}

int jacobi(int64_t a, uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    uint64_t ua = reduce_signed(a, n);
    int t = 1;
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            uint64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        uint64_t tmp = ua;
        ua = n;
        n = tmp;
        if (ua % 4 == 3 && n % 4 == 3) t = -t;
        ua %= n;
    }
    return n == 1 ? t : 0;
}

uint64_t checked_pow(uint64_t p, uint32_t e) {
    unsigned __int128 r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        r *= p;
        if (r >= kMaxModulus)
            throw modulus_overflow_error("checked_pow: " + std::to_string(p) +
                                         "^" + std::to_string(e) +
                                         " exceeds 2^63");
    }
    return static_cast<uint64_t>(r);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    auto mul = [n](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) %
                                     n);
    };
    // this base set is deterministic for all n < 2^64
    for (uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = 1, b = base % n, e = d;
        while (e) {
            if (e & 1) x = mul(x, b);
            b = mul(b, b);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace supercong
