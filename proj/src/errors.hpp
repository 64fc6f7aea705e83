#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

// gcd(x, modulus) > 1 where an inverse was required
struct not_invertible_error : std::domain_error {
    explicit not_invertible_error(const std::string &what)
        : std::domain_error(what) {}
};

// a p-adic value is no longer known to the precision the caller demands
struct precision_exhausted_error : std::runtime_error {
    explicit precision_exhausted_error(const std::string &what)
        : std::runtime_error(what) {}
};

// a claim was invoked outside its stated hypothesis on (p, a)
struct hypothesis_error : std::invalid_argument {
    explicit hypothesis_error(const std::string &what)
        : std::invalid_argument(what) {}
};

// p^e would not fit the fixed-width arithmetic
struct modulus_overflow_error : std::overflow_error {
    explicit modulus_overflow_error(const std::string &what)
        : std::overflow_error(what) {}
};

} // namespace supercong
