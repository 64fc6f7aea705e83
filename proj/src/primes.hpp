#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace supercong {

struct ResidueClassFilter {
    uint64_t modulus;
    uint64_t residue;
};

// all primes in [lo, hi] satisfying the optional residue-class filter,
// ascending; segmented so memory stays O(sqrt(hi) + segment)
std::vector<uint64_t> sieve_primes(
    uint64_t lo, uint64_t hi,
    std::optional<ResidueClassFilter> filter = std::nullopt);

} // namespace supercong
