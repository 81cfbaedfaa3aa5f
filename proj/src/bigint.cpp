#include "kpoisson/bigint.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "kpoisson/errors.hpp"

namespace kpoisson {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
    negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

BigInt BigInt::parse(std::string_view text) {
    bool negative = false;
    const std::string_view digits = strip_sign(text, negative);
    if (!all_digits(digits))
        throw ParseError("not an integer: '" + std::string(text) + "'");
    mpz_class v(std::string(digits), 10);
    if (negative)
        v = -v;
    return BigInt(std::move(v));
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt BigInt::abs() const {
    mpz_class r;
    mpz_abs(r.get_mpz_t(), v_.get_mpz_t());
    return BigInt(std::move(r));
}

bool BigInt::fits_int64() const {
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 assumed");
    return v_.fits_slong_p();
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64())
        throw std::overflow_error("BigInt does not fit in int64: " + to_string());
    return v_.get_si();
}

double BigInt::log_abs() const {
    if (is_zero())
        return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.is_zero())
        throw std::domain_error("BigInt division by zero");
    mpz_class r;
    mpz_tdiv_q(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.is_zero())
        throw std::domain_error("BigInt division by zero");
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
    if (b.is_zero() || !mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()))
        throw InternalInconsistency("inexact division " + a.to_string() + " / " + b.to_string());
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw std::domain_error("BigRational with zero denominator");
    v_.get_num() = num.raw();
    v_.get_den() = den.raw();
    v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero())
        throw std::domain_error("BigRational division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt BigRational::to_integer() const {
    if (!is_integer())
        throw InternalInconsistency("expected an integer, got " + to_string());
    return num();
}

double BigRational::to_double() const {
    // mpq_get_d truncates toward zero; round from the 64-bit quotient instead.
    return static_cast<double>(to_long_double());
}

long double BigRational::to_long_double() const {
    if (is_zero())
        return 0.0L;
    // Scale |num/den| into [2^63, 2^64) so the truncated quotient fills a
    // 64-bit mantissa exactly; the result is within one long-double ulp.
    const long num_bits = static_cast<long>(mpz_sizeinbase(v_.get_num_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(v_.get_den_mpz_t(), 2));
    long shift = 64 - (num_bits - den_bits);
    mpz_class num = ::abs(v_.get_num());
    mpz_class den = v_.get_den();
    if (shift >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    while (mpz_sizeinbase(q.get_mpz_t(), 2) > 64) {
        mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), 1);
        --shift;
    }
    const long double mag = std::ldexp(static_cast<long double>(q.get_ui()), static_cast<int>(-shift));
    return sign() < 0 ? -mag : mag;
}

BigRational BigRational::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt p = BigInt::parse(text.substr(0, slash));
        const std::string_view qtext = text.substr(slash + 1);
        if (!qtext.empty() && (qtext.front() == '+' || qtext.front() == '-'))
            throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
        const BigInt q = BigInt::parse(qtext);
        if (q.is_zero())
            throw ParseError("zero denominator: '" + std::string(text) + "'");
        return BigRational(p, q);
    }

    bool negative = false;
    std::string_view body = strip_sign(text, negative);
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        bool exp_negative = false;
        const std::string_view exp_digits = strip_sign(body.substr(e + 1), exp_negative);
        if (!all_digits(exp_digits) || exp_digits.size() > 6)
            throw ParseError("bad exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(exp_digits));
        if (exp_negative)
            exponent = -exponent;
        body = body.substr(0, e);
    }
    std::string int_part(body);
    std::string frac_part;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        int_part = std::string(body.substr(0, dot));
        frac_part = std::string(body.substr(dot + 1));
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("not a number: '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw ParseError("not a number: '" + std::string(text) + "'");

    BigInt num = BigInt::parse(int_part.empty() ? "0" : int_part);
    const auto frac_len = static_cast<long>(frac_part.size());
    if (frac_len > 0)
        num = num * BigInt::pow(10, static_cast<unsigned>(frac_len)) + BigInt::parse(frac_part);
    const long scale = exponent - frac_len;
    BigInt den = 1;
    if (scale >= 0)
        num *= BigInt::pow(10, static_cast<unsigned>(scale));
    else
        den = BigInt::pow(10, static_cast<unsigned>(-scale));
    if (negative)
        num = -num;
    return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

} // namespace kpoisson
