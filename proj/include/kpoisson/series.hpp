#ifndef KPOISSON_SERIES_HPP
#define KPOISSON_SERIES_HPP

#include <cstddef>
#include <vector>

#include "kpoisson/poly.hpp"

namespace kpoisson {

/// Power series in an expansion variable u, truncated after u^order, whose
/// coefficients are exact rational polynomials in lambda.
///
/// The order is fixed at construction. Combining two series of different
/// orders yields a series at the smaller order and sets `order_reduced()`
/// on the result, so silent precision loss is visible to the caller.
class TruncatedSeries {
public:
    /// Zero series at the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    TruncatedSeries(std::size_t order, std::vector<RationalPoly> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return order_; }
    bool order_reduced() const { return order_reduced_; }
    const RationalPoly& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<RationalPoly>& coeffs() const { return c_; }

    /// Multiplies every coefficient by a polynomial in lambda.
    TruncatedSeries scaled(const RationalPoly& p) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::size_t order_;
    std::vector<RationalPoly> c_; // size order_ + 1
    bool order_reduced_ = false;

    friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_exp(const TruncatedSeries&);
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& s, unsigned exponent);

/// exp(s) by the recurrence E_j = (1/j) * sum_{i=1..j} i * S_i * E_{j-i}.
/// Requires a zero constant term; throws PreconditionError otherwise.
TruncatedSeries series_exp(const TruncatedSeries& s);

} // namespace kpoisson

#endif
