#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "kpoisson/errors.hpp"
#include "kpoisson/moments.hpp"
#include "kpoisson/oracles.hpp"
#include "oracle_util.hpp"

using namespace kpoisson;

TEST(Fmgf, Examples) {
    EXPECT_EQ(fmgf_moment_poly(2, OrderParams(2)), (LambdaPoly{0, 2, 9}));
    EXPECT_EQ(fmgf_moment_poly(3, OrderParams(3)), (LambdaPoly{0, 6, 144, 216}));
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(fmgf_moment_poly(0, OrderParams(k)), LambdaPoly{1});
    EXPECT_THROW(fmgf_moment_poly(-1, OrderParams(2)), DomainError);
}

TEST(QValue, Examples) {
    EXPECT_EQ(q_value(4, 2, OrderParams(1)), BigInt(1));
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(q_value(1, 1, OrderParams(k)), BigInt(0));
        EXPECT_EQ(q_value(0, 0, OrderParams(k)), BigInt(1));
        EXPECT_EQ(q_value(2, 1, OrderParams(k)), BigInt(static_cast<std::int64_t>(oracle::pascal(k + 1, 2))));
    }
}

TEST(QValue, SupportAndRowSums) {
    for (int k = 1; k <= 6; ++k) {
        const QTable table(OrderParams(k), 6);
        const BigInt base((std::int64_t{1} << (k + 1)) - k - 2);
        for (int r = 0; r <= 6; ++r) {
            BigInt row = 0;
            for (int m = 0; m <= (k + 1) * r + 3; ++m) {
                const BigInt v = table.value(m, r);
                if (m < 2 * r || m > (k + 1) * r) {
                    EXPECT_TRUE(v.is_zero()) << "k=" << k << " m=" << m << " r=" << r;
                }
                EXPECT_GE(v.sign(), 0);
                row += v;
            }
            EXPECT_EQ(row, BigInt::pow(base, static_cast<unsigned>(r)));
        }
    }
}

TEST(Charalambides, Examples) {
    EXPECT_EQ(charalambides_moment_poly(2, OrderParams(1)), (LambdaPoly{0, 0, 1}));
    for (int k = 1; k <= 8; ++k)
        EXPECT_EQ(charalambides_moment_poly(1, OrderParams(k)), LambdaPoly::monomial(kappa(OrderParams(k), 1), 1));
    EXPECT_EQ(charalambides_moment_poly(4, OrderParams(2)), (LambdaPoly{0, 0, 12, 108, 81}));
}

TEST(OracleProperty, TripleAgreement) {
    for (int k = 1; k <= 8; ++k)
        for (int n = 0; n <= 12; ++n) {
            const OrderParams p(k);
            const LambdaPoly engine = factorial_moment_poly(n, p);
            EXPECT_EQ(fmgf_moment_poly(n, p), engine) << "n=" << n << " k=" << k;
            EXPECT_EQ(charalambides_moment_poly(n, p), engine) << "n=" << n << " k=" << k;
        }
}

TEST(PmfTable, RecursionMatchesClosedForm) {
    for (int k = 1; k <= 4; ++k) {
        const auto table = pmf_numeric_table(OrderParams(k), 1.3, 25);
        ASSERT_EQ(table.size(), 26U);
        for (int n = 0; n <= 25; ++n) {
            const double exact = pmf(n, OrderParams(k)).numeric(1.3);
            EXPECT_NEAR(static_cast<double>(table[static_cast<std::size_t>(n)]), exact, 1e-13 * exact + 1e-300);
        }
    }
    EXPECT_THROW(pmf_numeric_table(OrderParams(2), -0.5, 3), DomainError);
}

TEST(NumericMoment, Examples) {
    EXPECT_NEAR(numeric_factorial_moment(1, OrderParams(2), 1.0, 1e-10), 3.0, 3.0 * 1e-10);
    EXPECT_NEAR(numeric_factorial_moment(2, OrderParams(2), 1.0, 1e-10), 11.0, 11.0 * 1e-10);
    for (int k = 1; k <= 4; ++k)
        EXPECT_NEAR(numeric_factorial_moment(0, OrderParams(k), 1.7, 1e-10), 1.0, 1e-10);
}

TEST(NumericMoment, Errors) {
    EXPECT_THROW(numeric_factorial_moment(1, OrderParams(2), 0.0, 1e-10), DomainError);
    EXPECT_THROW(numeric_factorial_moment(1, OrderParams(2), 1.0, 0.0), DomainError);
    EXPECT_THROW(numeric_factorial_moment(-1, OrderParams(2), 1.0, 1e-10), DomainError);
}

TEST(NumericMoment, TailBoundIsReported) {
    const NumericMoment m = numeric_factorial_moment_detail(3, OrderParams(3), 2.0, 1e-12);
    EXPECT_GT(m.terms, 0U);
    EXPECT_GE(m.tail_bound, 0.0);
    EXPECT_LE(m.tail_bound, 1e-12 * m.value);
}

TEST(OracleProperty, NumericGrid) {
    for (int k = 1; k <= 5; ++k)
        for (double lam : {0.5, 1.0, 2.0})
            for (int n = 0; n <= 6; ++n) {
                const double exact = eval_numeric(factorial_moment_poly(n, OrderParams(k)), lam);
                const double approx = numeric_factorial_moment(n, OrderParams(k), lam, 1e-12);
                EXPECT_LE(std::fabs(approx - exact), 1e-8 * exact) << "k=" << k << " lambda=" << lam << " n=" << n;
            }
}

TEST(Sampler, SeedMixing) {
    // first output of the reference SplitMix64 stream seeded with 0
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(block_seed(5, 0), splitmix64(5 + 0x9E3779B97F4A7C15ULL));
    EXPECT_NE(block_seed(5, 0), block_seed(5, 1));
}

TEST(Sampler, Examples) {
    struct Case {
        int k;
        double lambda;
        int n_max;
        std::uint64_t seed;
    };
    for (const Case c : {Case{1, 1.0, 1, 42}, Case{3, 1.0, 1, 42}, Case{2, 0.5, 2, 42}}) {
        const SampleSummary s = sample_moments(OrderParams(c.k), c.lambda, c.n_max, 1'000'000, c.seed);
        ASSERT_EQ(s.estimates.size(), static_cast<std::size_t>(c.n_max));
        for (int n = 1; n <= c.n_max; ++n) {
            const double exact = eval_numeric(factorial_moment_poly(n, OrderParams(c.k)), c.lambda);
            const auto i = static_cast<std::size_t>(n - 1);
            EXPECT_LE(std::fabs(static_cast<double>(s.estimates[i]) - exact), 5 * static_cast<double>(s.std_errors[i]))
                << "k=" << c.k << " n=" << n;
        }
    }
    const SampleSummary s = sample_moments(OrderParams(2), 0.5, 2, 1'000'000, 42);
    EXPECT_NEAR(eval_numeric(LambdaPoly{0, 2, 9}, 0.5), 3.25, 1e-15);
    EXPECT_GT(s.std_errors[1], 0.0L);
}

TEST(Sampler, WorkerCountInvariance) {
    const SampleSummary a = sample_moments(OrderParams(3), 1.0, 3, 300'000, 11, 1);
    const SampleSummary b = sample_moments(OrderParams(3), 1.0, 3, 300'000, 11, 4);
    const SampleSummary c = sample_moments(OrderParams(3), 1.0, 3, 300'000, 11, 0);
    EXPECT_EQ(a.estimates, b.estimates);
    EXPECT_EQ(a.std_errors, b.std_errors);
    EXPECT_EQ(a.histogram, b.histogram);
    EXPECT_EQ(a.estimates, c.estimates);
    const SampleSummary d = sample_moments(OrderParams(3), 1.0, 3, 300'000, 12, 1);
    EXPECT_NE(a.histogram, d.histogram);
}

TEST(Sampler, EmpiricalPmf) {
    const std::uint64_t trials = 400'000;
    for (const auto& [k, lam] : {std::pair{2, 0.8}, std::pair{4, 0.3}}) {
        const SampleSummary s = sample_moments(OrderParams(k), lam, 1, trials, 2026);
        std::uint64_t total = 0;
        for (auto h : s.histogram)
            total += h;
        EXPECT_EQ(total, trials);
        for (int x = 0; x <= 15; ++x) {
            const double p = pmf(x, OrderParams(k)).numeric(lam);
            if (p * static_cast<double>(trials) < 5)
                continue;
            const double freq = x < static_cast<int>(s.histogram.size())
                                    ? static_cast<double>(s.histogram[static_cast<std::size_t>(x)]) / trials
                                    : 0.0;
            const double tol = 5 * std::sqrt(p * (1 - p) / trials);
            EXPECT_LE(std::fabs(freq - p), tol) << "k=" << k << " x=" << x;
        }
    }
}

TEST(Sampler, Errors) {
    EXPECT_THROW(sample_moments(OrderParams(2), 31.0, 1, 10, 1), NotSupported);
    EXPECT_THROW(sample_moments(OrderParams(2), 0.0, 1, 10, 1), DomainError);
    EXPECT_THROW(sample_moments(OrderParams(2), 1.0, 1, 0, 1), DomainError);
    EXPECT_THROW(sample_moments(OrderParams(2), 1.0, -1, 10, 1), DomainError);
}
