#ifndef KPOISSON_ORACLES_HPP
#define KPOISSON_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kpoisson/bigint.hpp"
#include "kpoisson/moments.hpp"
#include "kpoisson/poly.hpp"

namespace kpoisson {

// --- Factorial moment generating function route ---------------------------

/// n! [u^n] exp(lambda * sum_{j=1..k} ((1+u)^j - 1)).
///
/// This is the n-th derivative at t = 1 of exp(-k lambda) exp(lambda (t + ... + t^k))
/// after substituting t = 1 + u; the exp(-k lambda) factor cancels the
/// constant term exactly, so the series exponential is taken of a series
/// with zero constant term. Throws DomainError for n < 0.
LambdaPoly fmgf_moment_poly(int n, const OrderParams& params);

// --- Charalambides route --------------------------------------------------

/// Q(m, r) = [t^m] (sum_{j=1..k} C(k+1, j+1) t^{j+1})^r for r = 0..max_r.
///
/// Q(0, 0) = 1 and Q(m, r) = 0 outside 2r <= m <= (k+1) r. Powers are built
/// by repeated exact polynomial multiplication.
class QTable {
public:
    QTable(const OrderParams& params, int max_r);

    int order() const { return k_; }
    int max_r() const { return static_cast<int>(powers_.size()) - 1; }
    /// Zero outside the support; throws PreconditionError for r > max_r()
    /// or negative arguments.
    BigInt value(int m, int r) const;
    /// The base polynomial sum_j C(k+1, j+1) t^{j+1}.
    const IntPoly& base() const { return base_; }

private:
    int k_;
    IntPoly base_;
    std::vector<IntPoly> powers_; // powers_[r] = base^r
};

/// Single Q(m, r) lookup; builds a table up to r.
BigInt q_value(int m, int r, const OrderParams& params);

/// n! sum_{r=0..n} lambda^r Q(n+r, r) / r!, each coefficient asserted to be
/// a nonnegative integer (InternalInconsistency otherwise).
LambdaPoly charalambides_moment_poly(int n, const OrderParams& params);

// --- Numeric definitional route -------------------------------------------

/// Floating-point P_0..P_{x_max} from x P_x = lambda sum_{j=1..k} j P_{x-j},
/// P_0 = exp(-k lambda).
std::vector<long double> pmf_numeric_table(const OrderParams& params, double lambda, std::size_t x_max);

struct NumericMoment {
    double value = 0.0;
    std::size_t terms = 0;      // x = 0 .. terms-1 were summed
    double tail_bound = 0.0;    // certified bound on the omitted tail
};

/// sum_x x(x-1)...(x-n+1) P_x, truncated once a ratio-test tail bound drops
/// below eps times the partial sum.
///
/// The stopping test starts at x >= max(n, ceil(k * mean)). Once the term
/// ratio r = term(x+1)/term(x) stays below 1/2 for 3 consecutive x, the tail
/// is bounded by term(x) r / (1 - r). Summation stops at the first x where
/// that bound is below eps * sum. Throws TruncationFailure past x = 10^6.
/// Requires lambda > 0, 0 < eps < 1, n >= 0 (DomainError otherwise).
NumericMoment numeric_factorial_moment_detail(int n, const OrderParams& params, double lambda, double eps);
double numeric_factorial_moment(int n, const OrderParams& params, double lambda, double eps);

// --- Monte Carlo ----------------------------------------------------------

inline constexpr double kMaxSamplerLambda = 30.0;
inline constexpr std::uint64_t kSampleBlockSize = 1U << 16;

/// SplitMix64 finalizer; the seed of block i is splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

struct SampleSummary {
    int k = 1;
    double lambda = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    /// estimates[n-1] is the sample mean of X(X-1)...(X-n+1), n = 1..n_max.
    std::vector<long double> estimates;
    std::vector<long double> std_errors;
    /// histogram[x] counts draws equal to x.
    std::vector<std::uint64_t> histogram;
};

/// Draws `trials` realizations of X = sum_{j=1..k} j N_j with N_j iid
/// Poisson(lambda), and reports falling-factorial moment estimates.
///
/// Poisson variates come from sequential-search inversion with uniform
/// doubles (top 53 bits of a std::mt19937_64 draw). Trials are split into
/// fixed blocks of kSampleBlockSize; block i uses its own engine seeded with
/// block_seed(seed, i) and per-block sums are combined in block order, so the
/// result is bit-identical for any `workers` (0 means hardware concurrency).
/// Throws NotSupported for lambda > kMaxSamplerLambda and DomainError for
/// lambda <= 0, trials == 0 or n_max < 0.
SampleSummary sample_moments(const OrderParams& params, double lambda, int n_max, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers = 0);

} // namespace kpoisson

#endif
