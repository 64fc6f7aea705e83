#include "residue.hpp"

namespace supercong {

Residue mod_pow(int64_t base, uint64_t exp, uint64_t modulus) {
    if (modulus < 2)
        throw std::invalid_argument("mod_pow: modulus must be >= 2");
    return Residue(static_cast<int64_t>(
                       pow_mod(reduce_signed(base, modulus), exp, modulus)),
                   modulus);
}

Residue mod_inv(int64_t x, uint64_t modulus) {
    if (modulus < 2)
        throw std::invalid_argument("mod_inv: modulus must be >= 2");
    return Residue(
        static_cast<int64_t>(inv_mod(reduce_signed(x, modulus), modulus)),
        modulus);
}

int jacobi_symbol(int64_t a, uint64_t n) { return jacobi(a, n); }

Residue fermat_quotient(uint64_t p, int64_t b) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("fermat_quotient: p must be an odd prime");
    uint64_t p2 = checked_pow(p, 2);
    uint64_t br = reduce_signed(b, p2);
    if (br % p == 0)
        throw std::invalid_argument("fermat_quotient: p divides b");
    uint64_t r = pow_mod(br, p - 1, p2);
    // Fermat: r == 1 (mod p), so r - 1 is an exact multiple of p
    return Residue(static_cast<int64_t>((r - 1) / p), p);
}

} // namespace supercong
