#ifndef KPOISSON_MOMENTS_HPP
#define KPOISSON_MOMENTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kpoisson/bigint.hpp"
#include "kpoisson/poly.hpp"

namespace kpoisson {

/// Order k of the distribution; k = 1 is the standard Poisson law.
class OrderParams {
public:
    /// Throws PreconditionError unless k >= 1.
    explicit OrderParams(int k);
    int k() const { return k_; }
    friend bool operator==(const OrderParams&, const OrderParams&) = default;

private:
    int k_;
};

/// kappa_j = C(k+1, j+1) for j = 1..k, zero beyond k.
BigInt kappa(const OrderParams& params, int j);

/// The kappa_j values used by the moment engine. Kept as a separate value
/// so verification can run the engine against a deliberately altered table.
class KappaTable {
public:
    explicit KappaTable(const OrderParams& params);

    int order() const { return static_cast<int>(values_.size()); }
    /// Zero for j > order().
    const BigInt& at(int j) const;
    /// Copy with kappa_j replaced; used for fault injection.
    KappaTable with_value(int j, BigInt value) const;

private:
    std::vector<BigInt> values_; // values_[j - 1] = kappa_j
    BigInt zero_{0};
};

/// n-th factorial moment M_(n)(k, lambda) as an exact polynomial in lambda:
/// the sum over n_1 + 2 n_2 + ... + k n_k = n of
/// n! / prod(n_j!) * prod(kappa_j^{n_j}) * lambda^{sum n_j}.
///
/// Every summand's prefactor is checked to be a nonnegative integer; a
/// violation throws InternalInconsistency. Throws DomainError for n < 0.
LambdaPoly factorial_moment_poly(int n, const OrderParams& params);
LambdaPoly factorial_moment_poly(int n, const KappaTable& kappas);

/// k = 2 closed form: sum over s of n! / ((n-2s)! s!) * 3^{n-2s} * lambda^{n-s}.
LambdaPoly order2_moment_poly(int n);

/// P_n(k, lambda) = exp(-k lambda) * weight(lambda) / denom.
///
/// `weight` has nonnegative integer coefficients and (weight, denom) is in
/// lowest terms. The exponential factor stays symbolic; `numeric()` is the
/// only place floating point enters. Each nonzero coefficient is evaluated
/// in log space as exp(log c_m - log denom + m log lambda - k lambda), so the
/// relative error is a few ulps per term and grows at most linearly with the
/// number of terms.
struct PmfValue {
    int k = 1;
    int n = 0;
    IntPoly weight;
    BigInt denom{1};
    std::optional<BigRational> lambda;

    /// weight(lambda) / denom, exact.
    BigRational rational_part(const BigRational& lam) const;
    double numeric(double lam) const;
    /// Uses the stored lambda; throws PreconditionError if there is none.
    double numeric() const;
};

PmfValue pmf(int n, const OrderParams& params);
PmfValue pmf(int n, const OrderParams& params, const BigRational& lambda);

/// k(k+1)/2 * lambda. Throws DomainError for negative lambda.
BigRational mean(const OrderParams& params, const BigRational& lambda);
/// k(k+1)(2k+1)/6 * lambda. Throws DomainError for negative lambda.
BigRational variance(const OrderParams& params, const BigRational& lambda);

/// Closed-form coefficient of lambda^power in M_(n)(k, lambda) for the
/// supported powers n, n-1, n-2, n-3 and 1. Each form applies only on its
/// stated range:
///   power n    : k >= 1, n >= 1
///   power n-1  : k >= 2, n >= 2
///   power n-2  : k >= 3, n >= 3
///   power n-3  : k >= 4, n >= 4
///   power 1    : k >= 1, n >= 1
/// When `power` coincides with several of these the first applicable form in
/// the order above is used. Throws DomainError naming the violated range if
/// none applies. Rational prefactors (1/6, 2/135) are applied exactly and the
/// result must be an integer.
BigInt coeff_closed_form(int n, const OrderParams& params, int power);

/// floor((n + k - 1) / k), the lowest power of lambda present in M_(n).
/// Throws DomainError for n < 1.
int lowest_degree(int n, const OrderParams& params);

/// M_(2) + M_(1) - M_(1)^2 as a polynomial in lambda.
LambdaPoly variance_identity_poly(const OrderParams& params);
/// variance_identity_poly evaluated exactly. Throws DomainError for
/// negative lambda.
BigRational variance_from_factorials(const OrderParams& params, const BigRational& lambda);

/// Evaluates a moment polynomial at a real lambda in long double.
double eval_numeric(const LambdaPoly& p, double lambda);

} // namespace kpoisson

#endif
