#include "kpoisson/series.hpp"

#include <algorithm>

#include "kpoisson/errors.hpp"

namespace kpoisson {

TruncatedSeries::TruncatedSeries(std::size_t order) : order_(order), c_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<RationalPoly> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = RationalPoly::constant(1);
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const RationalPoly& p) const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i <= order_; ++i)
        out.c_[i] = c_[i] * p;
    out.order_reduced_ = order_reduced_;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i)
        out.c_[i] = a.c_[i] + b.c_[i];
    out.order_reduced_ = a.order_reduced_ || b.order_reduced_ || a.order_ != b.order_;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero())
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            out.c_[i + j] = out.c_[i + j] + a.coeff(i) * b.coeff(j);
    }
    out.order_reduced_ = a.order_reduced() || b.order_reduced() || a.order() != b.order();
    return out;
}

TruncatedSeries series_pow(const TruncatedSeries& s, unsigned exponent) {
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    while (exponent > 0) {
        if (exponent & 1U)
            result = series_mul(result, base);
        exponent >>= 1U;
        if (exponent > 0)
            base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw PreconditionError("series_exp: constant term must be zero, got " + s.coeff(0).to_string());
    const std::size_t order = s.order();
    std::vector<RationalPoly> e(order + 1);
    e[0] = RationalPoly::constant(1);
    for (std::size_t j = 1; j <= order; ++j) {
        RationalPoly acc;
        for (std::size_t i = 1; i <= j; ++i) {
            if (s.coeff(i).is_zero())
                continue;
            acc = acc + (s.coeff(i) * e[j - i]).scaled(BigRational(static_cast<std::int64_t>(i)));
        }
        e[j] = acc.scaled(BigRational(1, static_cast<std::int64_t>(j)));
    }
    TruncatedSeries out(order, std::move(e));
    out.order_reduced_ = s.order_reduced();
    return out;
}

} // namespace kpoisson
