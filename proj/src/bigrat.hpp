#pragma once

// Exact arbitrary-precision rationals for the identity lab and for
// brute-force oracle computations. Backed by Boost.Multiprecision; always
// reduced, never rounded.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "residue.hpp"

namespace supercong {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// exact binomial coefficient; 0 when k < 0 or k > n
BigInt big_binomial(int64_t n, int64_t k);

// exact integer power with integer base
BigInt big_pow(const BigInt &base, uint64_t exp);
BigRational rat_pow(const BigRational &base, int64_t exp);

// H_n = sum_{k<=n} 1/k as an exact rational
BigRational harmonic_exact(int64_t n);

// v_p of a nonzero rational
int64_t rat_valuation(const BigRational &q, uint64_t p);

// reduce a p-integral rational mod p^e; throws domain_error when the
// value has a pole at p
Residue rat_to_residue(const BigRational &q, uint64_t p, uint32_t e);

std::string rat_str(const BigRational &q);

} // namespace supercong
