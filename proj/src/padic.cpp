#include "padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace supercong {

PAdicApprox PAdicApprox::from_integer(int64_t x, uint64_t p, uint32_t e) {
    if (x == 0)
        throw std::invalid_argument(
            "split_valuation: x = 0 has no unit; use the zero element");
    PAdicApprox r(p, e);
    bool neg = x < 0;
    uint64_t ux = neg ? static_cast<uint64_t>(-(x + 1)) + 1
                      : static_cast<uint64_t>(x);
    int64_t v = 0;
    while (ux % p == 0) {
        ux /= p;
        ++v;
    }
    uint64_t u = ux % r.pe_;
    if (neg) u = r.pe_ - u; // u coprime to p, so nonzero
    r.v_ = v;
    r.unit_ = u;
    r.abs_ = v + e;
    return r;
}

PAdicApprox PAdicApprox::from_unit(uint64_t unit, int64_t v, uint64_t p,
                                   uint32_t e) {
    PAdicApprox r(p, e);
    unit %= r.pe_;
    if (unit % p == 0)
        throw std::invalid_argument("PAdicApprox: unit divisible by p");
    r.v_ = v;
    r.unit_ = unit;
    r.abs_ = v + e;
    return r;
}

void PAdicApprox::check_compatible(const PAdicApprox &o) const {
    if (p_ != o.p_ || e_ != o.e_)
        throw std::invalid_argument("PAdicApprox: mixed (p, e) contexts");
}

PAdicApprox PAdicApprox::operator*(const PAdicApprox &o) const {
    check_compatible(o);
    if (zero_ || o.zero_) return zero(p_, e_);
    PAdicApprox r(p_, e_);
    r.v_ = v_ + o.v_;
    r.unit_ = mul_mod(unit_, o.unit_, pe_);
    // abs(x*y) = min(v_x + abs_y, v_y + abs_x)
    r.abs_ = std::min(v_ + o.abs_, o.v_ + abs_);
    return r;
}

PAdicApprox PAdicApprox::inv() const {
    if (zero_) throw not_invertible_error("PAdicApprox: inverse of zero");
    if (guaranteed() < 1)
        throw precision_exhausted_error(
            "PAdicApprox: inverse of a value with no certain digits");
    PAdicApprox r(p_, e_);
    r.v_ = -v_;
    r.unit_ = inv_mod(unit_, pe_);
    r.abs_ = r.v_ + guaranteed();
    return r;
}

PAdicApprox PAdicApprox::operator-() const {
    if (zero_) return *this;
    PAdicApprox r = *this;
    r.unit_ = pe_ - unit_;
    return r;
}

PAdicApprox PAdicApprox::operator+(const PAdicApprox &o) const {
    check_compatible(o);
    if (zero_) return o;
    if (o.zero_) return *this;

    int64_t vmin = std::min(v_, o.v_);
    int64_t abs_out = std::min(abs_, o.abs_);

    // aligned representative sum; shifts capped at e since digits at or
    // above p^e in the aligned frame are beyond every guarantee
    auto shifted = [&](const PAdicApprox &x) -> unsigned __int128 {
        int64_t s = x.v_ - vmin;
        if (s >= static_cast<int64_t>(e_)) return 0;
        unsigned __int128 f = 1;
        for (int64_t i = 0; i < s; ++i) f *= p_;
        return static_cast<unsigned __int128>(x.unit_) * f;
    };
    unsigned __int128 sum = shifted(*this) + shifted(o);

    if (sum == 0) {
        // both contributions were beyond the window; nothing certain
        // remains below abs_out, and the representative is exact zero
        PAdicApprox r(p_, e_);
        r.zero_ = false;
        r.v_ = abs_out; // rep == 0 mod p^abs: place it at the horizon
        r.unit_ = 1;
        r.abs_ = abs_out;
        return r;
    }

    int64_t t = 0;
    while (sum % p_ == 0) {
        sum /= p_;
        ++t;
    }
    PAdicApprox r(p_, e_);
    r.v_ = vmin + t;
    r.unit_ = static_cast<uint64_t>(sum % pe_);
    r.abs_ = abs_out;
    return r;
}

PAdicApprox PAdicApprox::operator-(const PAdicApprox &o) const {
    return *this + (-o);
}

PAdicApprox PAdicApprox::mul_ppow(int64_t k) const {
    if (zero_) return *this;
    PAdicApprox r = *this;
    r.v_ += k;
    r.abs_ += k;
    return r;
}

Residue PAdicApprox::to_residue(uint32_t r) const {
    if (r > e_)
        throw std::invalid_argument("PAdicApprox: residue beyond context");
    uint64_t pr = checked_pow(p_, r);
    if (zero_) return Residue(0, pr);
    if (abs_ < static_cast<int64_t>(r))
        throw precision_exhausted_error(
            "PAdicApprox: value known only mod p^" + std::to_string(abs_) +
            ", requested mod p^" + std::to_string(r));
    if (v_ >= static_cast<int64_t>(r)) return Residue(0, pr);
    if (v_ < 0)
        throw std::domain_error("PAdicApprox: negative valuation has no "
                                "residue image");
    uint64_t pv = checked_pow(p_, static_cast<uint32_t>(v_));
    return Residue(static_cast<int64_t>(mul_mod(unit_ % pr, pv % pr, pr)),
                   pr);
}

int64_t PAdicApprox::valuation_capped(int64_t cap) const {
    if (zero_) return cap;
    if (std::min(v_, abs_) >= cap) return cap;
    if (v_ < cap && abs_ > v_) return v_;
    throw precision_exhausted_error(
        "PAdicApprox: valuation certain only >= p^" + std::to_string(abs_));
}

bool PAdicApprox::operator==(const PAdicApprox &o) const {
    if (p_ != o.p_ || e_ != o.e_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return v_ == o.v_ && unit_ == o.unit_;
}

PAdicApprox split_valuation(int64_t x, uint64_t p, uint32_t e) {
    return PAdicApprox::from_integer(x, p, e);
}

std::ostream &operator<<(std::ostream &os, const PAdicApprox &x) {
    if (x.is_zero()) return os << "0";
    return os << x.unit() << "*" << x.prime() << "^" << x.valuation();
}

} // namespace supercong
