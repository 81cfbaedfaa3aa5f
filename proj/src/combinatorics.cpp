#include "kpoisson/combinatorics.hpp"

#include <string>

#include "kpoisson/errors.hpp"

namespace kpoisson {

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (a < 0)
        throw PreconditionError("binomial: a must be nonnegative, got " + std::to_string(a));
    if (b < 0 || b > a)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return BigInt(std::move(r));
}

BigInt factorial(std::int64_t n) {
    if (n < 0)
        throw PreconditionError("factorial: n must be nonnegative, got " + std::to_string(n));
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return BigInt(std::move(r));
}

BigInt falling_factorial(std::int64_t x, std::int64_t n) {
    if (x < 0 || n < 0)
        throw PreconditionError("falling_factorial: arguments must be nonnegative");
    if (n > x)
        return 0;
    BigInt r = 1;
    for (std::int64_t i = 0; i < n; ++i)
        r *= BigInt(x - i);
    return r;
}

} // namespace kpoisson
