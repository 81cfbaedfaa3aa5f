#ifndef KPOISSON_COMBINATORICS_HPP
#define KPOISSON_COMBINATORICS_HPP

#include <cstdint>

#include "kpoisson/bigint.hpp"

namespace kpoisson {

/// C(a, b); zero when b < 0 or b > a. Requires a >= 0.
BigInt binomial(std::int64_t a, std::int64_t b);

/// n!. Requires n >= 0.
BigInt factorial(std::int64_t n);

/// x (x-1) ... (x-n+1): one for n = 0, zero for n > x. Requires x, n >= 0.
BigInt falling_factorial(std::int64_t x, std::int64_t n);

} // namespace kpoisson

#endif
