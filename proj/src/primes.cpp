#include "primes.hpp"

#include <cmath>
#include <stdexcept>

namespace supercong {

namespace {
constexpr uint64_t kSegment = 1 << 16;

std::vector<uint64_t> base_primes(uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return primes;
}
} // namespace

std::vector<uint64_t> sieve_primes(uint64_t lo, uint64_t hi,
                                   std::optional<ResidueClassFilter> filter) {
    if (lo < 2) lo = 2;
    if (hi < lo) throw std::invalid_argument("sieve_primes: hi < lo");

    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi)));
    while ((root + 1) * (root + 1) <= hi) ++root;
    auto base = base_primes(root < 2 ? 2 : root);

    std::vector<uint64_t> out;
    std::vector<bool> comp;
    for (uint64_t start = lo; start <= hi; start += kSegment) {
        uint64_t end = std::min(hi, start + kSegment - 1);
        comp.assign(end - start + 1, false);
        for (uint64_t q : base) {
            if (q * q > end) break;
            uint64_t first = std::max(q * q, ((start + q - 1) / q) * q);
            for (uint64_t j = first; j <= end; j += q)
                comp[j - start] = true;
        }
        for (uint64_t n = start; n <= end; ++n) {
            if (n < 2 || comp[n - start]) continue;
            if (filter && n % filter->modulus != filter->residue) continue;
            out.push_back(n);
        }
    }
    return out;
}

} // namespace supercong
