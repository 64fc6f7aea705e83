#pragma once

// Residue: a canonical value paired with its modulus. All congruence
// verdicts in the library are stated over these. Arithmetic between
// residues of different moduli is rejected.

#include <cstdint>
#include <ostream>

#include "modmath.hpp"

namespace supercong {

class Residue {
  public:
    Residue() : value_(0), modulus_(2) {}
    Residue(int64_t value, uint64_t modulus) : modulus_(modulus) {
        if (modulus < 2)
            throw std::invalid_argument("Residue: modulus must be >= 2");
        value_ = reduce_signed(value, modulus);
    }

    uint64_t value() const { return value_; }
    uint64_t modulus() const { return modulus_; }

    Residue operator+(const Residue &o) const {
        check(o);
        uint64_t s = value_ + o.value_; // moduli < 2^63, no overflow
        if (s >= modulus_) s -= modulus_;
        return unchecked(s, modulus_);
    }
    Residue operator-(const Residue &o) const {
        check(o);
        uint64_t s = value_ + modulus_ - o.value_;
        if (s >= modulus_) s -= modulus_;
        return unchecked(s, modulus_);
    }
    Residue operator*(const Residue &o) const {
        check(o);
        return unchecked(mul_mod(value_, o.value_, modulus_), modulus_);
    }
    Residue operator-() const {
        return unchecked(value_ ? modulus_ - value_ : 0, modulus_);
    }
    Residue inv() const { return unchecked(inv_mod(value_, modulus_), modulus_); }
    Residue pow(uint64_t e) const {
        return unchecked(pow_mod(value_, e, modulus_), modulus_);
    }

    bool operator==(const Residue &o) const {
        return value_ == o.value_ && modulus_ == o.modulus_;
    }

  private:
    static Residue unchecked(uint64_t v, uint64_t m) {
        Residue r;
        r.value_ = v;
        r.modulus_ = m;
        return r;
    }
    void check(const Residue &o) const {
        if (modulus_ != o.modulus_)
            throw std::invalid_argument("Residue: mixed moduli");
    }

    uint64_t value_;
    uint64_t modulus_;
};

inline std::ostream &operator<<(std::ostream &os, const Residue &r) {
    return os << r.value() << " (mod " << r.modulus() << ")";
}

// base^exp mod modulus, O(log exp) multiplications
Residue mod_pow(int64_t base, uint64_t exp, uint64_t modulus);

// y with x*y == 1 (mod modulus); throws not_invertible_error otherwise
Residue mod_inv(int64_t x, uint64_t modulus);

// Jacobi symbol (a/n), n odd positive; multiplicative in both arguments
int jacobi_symbol(int64_t a, uint64_t n);

// q_p(b) = (b^(p-1) - 1)/p mod p for odd prime p with p !| b, computed
// as b^(p-1) mod p^2 followed by exact division by p
Residue fermat_quotient(uint64_t p, int64_t b);

// a Jacobi value {-1, 0, 1} lifted into Z/m
inline Residue lift_sign(int s, uint64_t m) { return Residue(s, m); }

} // namespace supercong
