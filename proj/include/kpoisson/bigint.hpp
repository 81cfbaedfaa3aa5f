#ifndef KPOISSON_BIGINT_HPP
#define KPOISSON_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kpoisson {

/// Exact signed integer of unbounded size.
///
/// Value type over a GMP integer. Zero is always stored with sign 0, so
/// equality and hashing never see a "negative zero".
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) : v_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed base-10 integer. Throws ParseError.
    static BigInt parse(std::string_view text);

    static BigInt pow(const BigInt& base, unsigned exponent);
    static BigInt gcd(const BigInt& a, const BigInt& b);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    BigInt abs() const;

    bool fits_int64() const;
    std::int64_t to_int64() const; // throws std::overflow_error
    double to_double() const { return v_.get_d(); }
    /// Natural log of |*this|, accurate to double precision for any size.
    double log_abs() const;

    std::string to_string() const { return v_.get_str(10); }
    const mpz_class& raw() const { return v_; }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

    /// Truncating division, as for built-in integers. Throws on zero divisor.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    /// Division known to be exact; throws InternalInconsistency otherwise.
    static BigInt divexact(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

private:
    mpz_class v_;
};

/// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t v) : v_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : v_(v.raw()) {}             // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);

    /// Accepts `p/q`, an integer, or a decimal literal such as `-1.25e-3`.
    /// Decimals are converted exactly (no binary floating point involved).
    static BigRational parse(std::string_view text);

    BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(v_.get_den())); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Integer value; throws InternalInconsistency when not integral.
    BigInt to_integer() const;

    double to_double() const;
    long double to_long_double() const;
    /// `p` for integers, `p/q` otherwise.
    std::string to_string() const { return v_.get_str(10); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return from_raw(mpq_class(-a.v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& x);

private:
    static BigRational from_raw(mpq_class v) {
        BigRational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

} // namespace kpoisson

#endif
