#pragma once

// Fixed-width modular arithmetic on uint64_t moduli. Every modulus in the
// library is < 2^63 so that products fit unsigned __int128 and signed
// canonicalization never overflows.

#include <cstdint>

#include "errors.hpp"

namespace supercong {

inline constexpr uint64_t kMaxModulus = (uint64_t{1} << 63);

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// canonical representative of a signed value
inline uint64_t reduce_signed(int64_t x, uint64_t m) {
    int64_t r = x % static_cast<int64_t>(m);
    if (r < 0) r += static_cast<int64_t>(m);
    return static_cast<uint64_t>(r);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// inverse of x mod m; throws not_invertible_error when gcd(x, m) > 1
uint64_t inv_mod(uint64_t x, uint64_t m);

// Jacobi symbol (a/n) for odd positive n; throws std::invalid_argument
// on even or zero n
int jacobi(int64_t a, uint64_t n);

// exponent of p in x (x > 0)
inline int vp_u64(uint64_t x, uint64_t p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// p^e, rejecting results >= 2^63
uint64_t checked_pow(uint64_t p, uint32_t e);

// deterministic Miller-Rabin for 64-bit inputs
bool is_prime(uint64_t n);

} // namespace supercong
