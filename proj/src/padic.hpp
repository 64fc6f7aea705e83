#pragma once

// PAdicApprox: a number written as unit * p^v with the unit carried modulo
// p^e. Survives exact division by multiples of p, which plain residues
// cannot. Cancellation in additions is tracked through an absolute
// precision: the representative is congruent to the true value modulo
// p^abs, so a value whose known digits have all cancelled still certifies
// "== 0 (mod p^abs)". Demanding more digits than are guaranteed raises
// precision_exhausted_error.

#include <cstdint>
#include <limits>
#include <ostream>

#include "modmath.hpp"
#include "residue.hpp"

namespace supercong {

class PAdicApprox {
  public:
    static constexpr int64_t kInfinite = std::numeric_limits<int64_t>::max();

    static PAdicApprox zero(uint64_t p, uint32_t e) {
        PAdicApprox x(p, e);
        x.zero_ = true;
        x.v_ = kInfinite;
        x.abs_ = kInfinite;
        return x;
    }

    static PAdicApprox one(uint64_t p, uint32_t e) {
        PAdicApprox x(p, e);
        x.v_ = 0;
        x.unit_ = 1;
        x.abs_ = e;
        return x;
    }

    // split x = unit * p^v with p !| unit; rejects x = 0
    static PAdicApprox from_integer(int64_t x, uint64_t p, uint32_t e);

    // unit already coprime to p, taken mod p^e
    static PAdicApprox from_unit(uint64_t unit, int64_t v, uint64_t p,
                                 uint32_t e);

    uint64_t prime() const { return p_; }
    uint32_t precision() const { return e_; }
    bool is_zero() const { return zero_; }

    // representative fields (meaningful digits only up to guaranteed())
    int64_t valuation() const { return v_; }
    uint64_t unit() const { return unit_; }

    // number of guaranteed unit digits; <= 0 means only "== 0 mod p^abs"
    // is known
    int64_t guaranteed() const { return zero_ ? kInfinite : abs_ - v_; }
    // the value is congruent to the representative modulo p^absolute()
    int64_t absolute() const { return abs_; }

    bool is_effectively_zero() const { return zero_ || guaranteed() <= 0; }

    PAdicApprox operator*(const PAdicApprox &o) const;
    PAdicApprox operator+(const PAdicApprox &o) const;
    PAdicApprox operator-(const PAdicApprox &o) const;
    PAdicApprox operator-() const;
    PAdicApprox inv() const;

    // exact multiplication by p^k (k may be negative)
    PAdicApprox mul_ppow(int64_t k) const;

    // the value mod p^r (r <= e); throws precision_exhausted_error when
    // fewer than r digits are certain and domain_error on negative
    // valuation
    Residue to_residue(uint32_t r) const;

    // min(v_p(value), cap) when certifiable, else precision_exhausted_error
    int64_t valuation_capped(int64_t cap) const;

    // equal iff both zero, or same valuation with units agreeing mod p^e
    bool operator==(const PAdicApprox &o) const;

  private:
    PAdicApprox(uint64_t p, uint32_t e)
        : p_(p), e_(e), pe_(checked_pow(p, e)) {}
    void check_compatible(const PAdicApprox &o) const;

    uint64_t p_;
    uint32_t e_;
    uint64_t pe_;
    bool zero_ = false;
    int64_t v_ = 0;
    uint64_t unit_ = 1;
    int64_t abs_ = 0;
};

// split x = unit * p^v with the unit reduced mod p^e; rejects x = 0
PAdicApprox split_valuation(int64_t x, uint64_t p, uint32_t e);

inline PAdicApprox padic_mul(const PAdicApprox &x, const PAdicApprox &y) {
    return x * y;
}
inline PAdicApprox padic_add(const PAdicApprox &x, const PAdicApprox &y) {
    return x + y;
}
inline PAdicApprox padic_inv(const PAdicApprox &x) { return x.inv(); }

std::ostream &operator<<(std::ostream &os, const PAdicApprox &x);

} // namespace supercong
