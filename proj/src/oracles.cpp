#include "kpoisson/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "kpoisson/combinatorics.hpp"
#include "kpoisson/errors.hpp"
#include "kpoisson/series.hpp"

namespace kpoisson {

LambdaPoly fmgf_moment_poly(int n, const OrderParams& params) {
    if (n < 0)
        throw DomainError("fmgf_moment_poly: n must be nonnegative");
    const auto order = static_cast<std::size_t>(n);

    // lambda * sum_j ((1+u)^j - 1), coefficient by coefficient.
    std::vector<RationalPoly> exponent(order + 1);
    for (std::size_t i = 1; i <= order; ++i) {
        BigInt d = 0;
        for (int j = 1; j <= params.k(); ++j)
            d += binomial(j, static_cast<std::int64_t>(i));
        exponent[i] = RationalPoly::monomial(BigRational(d), 1);
    }
    const TruncatedSeries fmgf = series_exp(TruncatedSeries(order, std::move(exponent)));
    const RationalPoly moment = fmgf.coeff(order) * RationalPoly::constant(BigRational(factorial(n)));
    return to_integral(moment, "fmgf_moment_poly(n=" + std::to_string(n) + ", k=" + std::to_string(params.k()) + ")");
}

QTable::QTable(const OrderParams& params, int max_r) : k_(params.k()) {
    if (max_r < 0)
        throw PreconditionError("QTable: max_r must be nonnegative");
    std::vector<BigInt> base(static_cast<std::size_t>(k_) + 2, BigInt(0));
    for (int j = 1; j <= k_; ++j)
        base[static_cast<std::size_t>(j) + 1] = binomial(k_ + 1, j + 1);
    base_ = IntPoly(std::move(base));

    powers_.reserve(static_cast<std::size_t>(max_r) + 1);
    powers_.push_back(IntPoly::constant(1));
    for (int r = 1; r <= max_r; ++r)
        powers_.push_back(powers_.back() * base_);
}

BigInt QTable::value(int m, int r) const {
    if (m < 0 || r < 0)
        throw PreconditionError("QTable::value: arguments must be nonnegative");
    if (r > max_r())
        throw PreconditionError("QTable::value: r=" + std::to_string(r) + " beyond table size " +
                                std::to_string(max_r()));
    return powers_[static_cast<std::size_t>(r)].coeff(static_cast<std::size_t>(m));
}

BigInt q_value(int m, int r, const OrderParams& params) {
    return QTable(params, r).value(m, r);
}

LambdaPoly charalambides_moment_poly(int n, const OrderParams& params) {
    if (n < 0)
        throw DomainError("charalambides_moment_poly: n must be nonnegative");
    const QTable q(params, n);
    const BigInt n_factorial = factorial(n);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int r = 0; r <= n; ++r) {
        const BigRational c = BigRational(n_factorial * q.value(n + r, r), factorial(r));
        if (!c.is_integer() || c.sign() < 0)
            throw InternalInconsistency("charalambides_moment_poly: coefficient of lambda^" + std::to_string(r) +
                                        " is " + c.to_string() + ", expected a nonnegative integer");
        coeffs[static_cast<std::size_t>(r)] = c.num();
    }
    return LambdaPoly(std::move(coeffs));
}

namespace {

// Extends p (P_0 .. P_{size-1}) by one entry using the recurrence.
void extend_pmf(std::vector<long double>& p, int k, long double lambda) {
    const std::size_t x = p.size();
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(k) && j <= x; ++j)
        acc += static_cast<long double>(j) * p[x - j];
    p.push_back(lambda * acc / static_cast<long double>(x));
}

long double falling_factorial_ld(std::size_t x, int n) {
    if (static_cast<std::size_t>(n) > x)
        return 0.0L;
    long double r = 1.0L;
    for (int i = 0; i < n; ++i)
        r *= static_cast<long double>(x - static_cast<std::size_t>(i));
    return r;
}

} // namespace

std::vector<long double> pmf_numeric_table(const OrderParams& params, double lambda, std::size_t x_max) {
    if (!(lambda >= 0.0))
        throw DomainError("pmf_numeric_table: lambda must be nonnegative");
    std::vector<long double> p;
    p.reserve(x_max + 1);
    p.push_back(std::exp(-static_cast<long double>(params.k()) * lambda));
    while (p.size() <= x_max)
        extend_pmf(p, params.k(), lambda);
    return p;
}

NumericMoment numeric_factorial_moment_detail(int n, const OrderParams& params, double lambda, double eps) {
    if (!(lambda > 0.0))
        throw DomainError("numeric_factorial_moment: lambda must be positive");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("numeric_factorial_moment: eps must lie in (0, 1)");
    if (n < 0)
        throw DomainError("numeric_factorial_moment: n must be nonnegative");

    constexpr std::size_t kHardCap = 1'000'000;
    constexpr int kStreakNeeded = 3;
    const int k = params.k();
    const double dist_mean = static_cast<double>(k) * (k + 1) / 2.0 * lambda;
    const auto start = std::max(static_cast<std::size_t>(n),
                                static_cast<std::size_t>(std::ceil(static_cast<double>(k) * dist_mean)));

    std::vector<long double> p{std::exp(-static_cast<long double>(k) * lambda)};
    long double sum = 0.0L;
    int streak = 0;
    for (std::size_t x = 0; x <= kHardCap; ++x) {
        while (p.size() <= x + 1)
            extend_pmf(p, k, lambda);
        const long double term = falling_factorial_ld(x, n) * p[x];
        sum += term;
        if (x < start)
            continue;
        const long double next = falling_factorial_ld(x + 1, n) * p[x + 1];
        const long double ratio = term > 0.0L ? next / term : 0.0L;
        streak = ratio < 0.5L ? streak + 1 : 0;
        if (streak < kStreakNeeded)
            continue;
        const long double bound = term * ratio / (1.0L - ratio);
        if (bound < static_cast<long double>(eps) * sum)
            return {static_cast<double>(sum), x + 1, static_cast<double>(bound)};
    }
    throw TruncationFailure("numeric_factorial_moment: tail bound not reached within x <= " +
                            std::to_string(kHardCap));
}

double numeric_factorial_moment(int n, const OrderParams& params, double lambda, double eps) {
    return numeric_factorial_moment_detail(n, params, lambda, eps).value;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    return splitmix64(seed + (block + 1) * 0x9E3779B97F4A7C15ULL);
}

namespace {

struct BlockResult {
    std::vector<long double> sums;
    std::vector<long double> sum_squares;
    std::vector<std::uint64_t> histogram;
};

class PoissonInversion {
public:
    explicit PoissonInversion(double lambda) : lambda_(lambda), p0_(std::exp(-lambda)) {}

    template <typename Engine>
    std::uint64_t operator()(Engine& eng) const {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        std::uint64_t x = 0;
        double p = p0_;
        double cdf = p;
        // F saturates just below 1 in double; the cap ends the search there.
        while (u > cdf && x < kSearchCap) {
            ++x;
            p *= lambda_ / static_cast<double>(x);
            cdf += p;
        }
        return x;
    }

private:
    static constexpr std::uint64_t kSearchCap = 1000;
    double lambda_;
    double p0_;
};

BlockResult run_block(int k, const PoissonInversion& poisson, int n_max, std::uint64_t count, std::uint64_t seed) {
    BlockResult out;
    out.sums.assign(static_cast<std::size_t>(n_max), 0.0L);
    out.sum_squares.assign(static_cast<std::size_t>(n_max), 0.0L);
    std::mt19937_64 eng(seed);
    for (std::uint64_t t = 0; t < count; ++t) {
        std::uint64_t x = 0;
        for (int j = 1; j <= k; ++j)
            x += static_cast<std::uint64_t>(j) * poisson(eng);
        if (x >= out.histogram.size())
            out.histogram.resize(x + 1, 0);
        ++out.histogram[x];
        long double f = 1.0L;
        for (int n = 1; n <= n_max; ++n) {
            f *= static_cast<long double>(x) - static_cast<long double>(n - 1);
            out.sums[static_cast<std::size_t>(n - 1)] += f;
            out.sum_squares[static_cast<std::size_t>(n - 1)] += f * f;
        }
    }
    return out;
}

} // namespace

SampleSummary sample_moments(const OrderParams& params, double lambda, int n_max, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers) {
    if (!(lambda > 0.0))
        throw DomainError("sample_moments: lambda must be positive");
    if (lambda > kMaxSamplerLambda)
        throw NotSupported("sample_moments: lambda > 30 is not supported by the inversion sampler");
    if (trials == 0)
        throw DomainError("sample_moments: trials must be at least 1");
    if (n_max < 0)
        throw DomainError("sample_moments: n_max must be nonnegative");

    const std::uint64_t blocks = (trials + kSampleBlockSize - 1) / kSampleBlockSize;
    if (workers == 0)
        workers = std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

    const PoissonInversion poisson(lambda);
    std::vector<BlockResult> results(blocks);
    auto work = [&](unsigned w) {
        for (std::uint64_t b = w; b < blocks; b += workers) {
            const std::uint64_t count = std::min(kSampleBlockSize, trials - b * kSampleBlockSize);
            results[b] = run_block(params.k(), poisson, n_max, count, block_seed(seed, b));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }

    SampleSummary out;
    out.k = params.k();
    out.lambda = lambda;
    out.trials = trials;
    out.seed = seed;
    std::vector<long double> sums(static_cast<std::size_t>(n_max), 0.0L);
    std::vector<long double> squares(static_cast<std::size_t>(n_max), 0.0L);
    for (const BlockResult& r : results) {
        for (std::size_t i = 0; i < sums.size(); ++i) {
            sums[i] += r.sums[i];
            squares[i] += r.sum_squares[i];
        }
        if (r.histogram.size() > out.histogram.size())
            out.histogram.resize(r.histogram.size(), 0);
        for (std::size_t x = 0; x < r.histogram.size(); ++x)
            out.histogram[x] += r.histogram[x];
    }
    const auto t = static_cast<long double>(trials);
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const long double m = sums[i] / t;
        long double var = trials > 1 ? (squares[i] - t * m * m) / (t - 1.0L) : 0.0L;
        if (var < 0.0L)
            var = 0.0L;
        out.estimates.push_back(m);
        out.std_errors.push_back(std::sqrt(var / t));
    }
    return out;
}

} // namespace kpoisson
