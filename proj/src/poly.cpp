#include "kpoisson/poly.hpp"

#include "kpoisson/errors.hpp"

namespace kpoisson {

RationalPoly to_rational(const IntPoly& p) {
    std::vector<BigRational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(c);
    return RationalPoly(std::move(v));
}

IntPoly to_integral(const RationalPoly& p, const std::string& what) {
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const BigRational& c = p.coeffs()[i];
        if (!c.is_integer())
            throw InternalInconsistency(what + ": coefficient of power " + std::to_string(i) +
                                        " is not an integer (" + c.to_string() + ")");
        v.push_back(c.num());
    }
    return IntPoly(std::move(v));
}

} // namespace kpoisson
