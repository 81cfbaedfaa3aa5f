#ifndef KPOISSON_POLY_HPP
#define KPOISSON_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpoisson/bigint.hpp"

namespace kpoisson {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Always normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing. Values are immutable once built; every
/// operation returns a new polynomial.
template <typename C>
class Poly {
public:
    using coeff_type = C;

    Poly() = default;
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }
    static Poly monomial(C c, std::size_t power) {
        std::vector<C> v(power + 1);
        v[power] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient, -1 for the zero polynomial.
    std::ptrdiff_t lowest_power() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero())
                return static_cast<std::ptrdiff_t>(i);
        return -1;
    }
    /// Zero beyond the degree.
    C coeff(std::size_t power) const { return power < c_.size() ? c_[power] : C{}; }
    std::span<const C> coeffs() const { return c_; }

    /// Horner evaluation; `V` is any ring containing C (e.g. BigRational).
    template <typename V>
    V eval(const V& x) const {
        V acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + V(*it);
        return acc;
    }

    Poly scaled(const C& s) const {
        if (s.is_zero())
            return {};
        std::vector<C> v(c_);
        for (auto& x : v)
            x *= s;
        return Poly(std::move(v));
    }

    /// Multiplies by x^shift.
    Poly shifted(std::size_t shift) const {
        if (is_zero())
            return {};
        std::vector<C> v(shift);
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    /// Keeps only powers below `order`.
    Poly truncated(std::size_t order) const {
        if (c_.size() <= order)
            return *this;
        return Poly(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order)));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            v[i] += b.c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<C> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_)
            v.push_back(-x);
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    // Schoolbook; operands stay in the low dozens of terms.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<C> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human-readable form, highest power first, e.g. `9*L^2 + 2*L`.
    std::string to_string(const std::string& var = "L") const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const C& c = c_[i];
            if (c.is_zero())
                continue;
            std::string mag = (c.sign() < 0 ? (-c) : c).to_string();
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            if (i == 0) {
                out += mag;
                continue;
            }
            if (mag != "1")
                out += mag + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<C> c_;
};

using IntPoly = Poly<BigInt>;
using RationalPoly = Poly<BigRational>;

/// Polynomial in the rate parameter with integer coefficients; the shape of
/// every factorial moment.
using LambdaPoly = IntPoly;

RationalPoly to_rational(const IntPoly& p);

/// Throws InternalInconsistency naming `what` if any coefficient is not an
/// integer.
IntPoly to_integral(const RationalPoly& p, const std::string& what);

} // namespace kpoisson

#endif
