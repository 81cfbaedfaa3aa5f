#include "kpoisson/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <future>
#include <set>
#include <thread>

#include "kpoisson/cli/records.hpp"
#include "kpoisson/combinatorics.hpp"
#include "kpoisson/errors.hpp"
#include "kpoisson/moments.hpp"
#include "kpoisson/oracles.hpp"
#include "kpoisson/partitions.hpp"

namespace kpoisson::cli {

namespace {

enum Family : std::size_t {
    kPartitionCount,
    kTripleAgreement,
    kOrderOneCollapse,
    kOrderTwoClosedForm,
    kDegreeStructure,
    kCoeffClosedForm,
    kMeanVariance,
    kPmfWeights,
    kMonteCarlo,
    kFamilyCount,
};

constexpr const char* kFamilyNames[kFamilyCount] = {
    "partition_count",  "triple_agreement",  "k1_collapse", "order2_closed_form", "degree_structure",
    "coeff_closed_form", "mean_variance", "pmf_weights", "monte_carlo",
};

struct Outcome {
    bool ok = true;
    std::string expected;
    std::string actual;
};

class Recorder {
public:
    explicit Recorder(int k) : k_(k) {
        for (std::size_t f = 0; f < kFamilyCount; ++f)
            families_.push_back({kFamilyNames[f], 0, 0});
    }

    void check(Family family, int n, const std::function<Outcome()>& body) {
        Outcome out;
        try {
            out = body();
        } catch (const std::exception& e) {
            out = {false, "no exception", std::string("exception: ") + e.what()};
        }
        ++families_[family].checks;
        if (out.ok)
            return;
        ++families_[family].failures;
        if (!first_)
            first_ = Counterexample{kFamilyNames[family], k_, n, std::move(out.expected), std::move(out.actual)};
    }

    std::vector<CheckFamily> families_;
    std::optional<Counterexample> first_;

private:
    int k_;
};

Outcome same_poly(const LambdaPoly& expected, const LambdaPoly& actual) {
    return {expected == actual, expected.to_string(), actual.to_string()};
}

Outcome same_int(const BigInt& expected, const BigInt& actual) {
    return {expected == actual, expected.to_string(), actual.to_string()};
}

Recorder verify_order(int k, const VerifyOptions& opt) {
    const OrderParams params(k);
    KappaTable kappas(params);
    if (opt.corrupt_kappa)
        kappas = kappas.with_value(1, kappas.at(1) + BigInt(1));
    Recorder rec(k);

    for (int n = 0; n <= opt.n_max; ++n) {
        const auto un = static_cast<std::uint32_t>(n);
        const auto uk = static_cast<std::uint32_t>(k);
        rec.check(kPartitionCount, n, [&] {
            std::uint64_t count = 0;
            std::set<std::vector<std::uint32_t>> seen;
            for (const PartsVector& v : enumerate_weighted(un, uk)) {
                std::uint64_t w = 0;
                for (std::size_t j = 1; j <= v.order(); ++j)
                    w += j * v.mult(j);
                if (w != un)
                    return Outcome{false, "weight " + std::to_string(n), "weight " + std::to_string(w)};
                seen.insert(v.mults());
                ++count;
            }
            const BigInt expected = count_weighted(un, uk);
            if (seen.size() != count)
                return Outcome{false, "distinct vectors", "duplicates in stream"};
            return same_int(expected, BigInt(static_cast<std::int64_t>(count)));
        });

        LambdaPoly engine;
        try {
            engine = factorial_moment_poly(n, kappas);
        } catch (const std::exception& e) {
            const std::string what = e.what();
            rec.check(kTripleAgreement, n, [&] { return Outcome{false, "engine result", "exception: " + what}; });
            continue;
        }
        rec.check(kTripleAgreement, n, [&] { return same_poly(fmgf_moment_poly(n, params), engine); });
        rec.check(kTripleAgreement, n, [&] { return same_poly(charalambides_moment_poly(n, params), engine); });

        if (k == 1)
            rec.check(kOrderOneCollapse, n, [&] { return same_poly(LambdaPoly::monomial(1, un), engine); });
        if (k == 2)
            rec.check(kOrderTwoClosedForm, n, [&] { return same_poly(order2_moment_poly(n), engine); });

        rec.check(kDegreeStructure, n, [&] {
            if (n == 0)
                return same_poly(LambdaPoly::constant(1), engine);
            if (engine.degree() != n)
                return Outcome{false, "degree " + std::to_string(n), "degree " + std::to_string(engine.degree())};
            if (!engine.coeff(0).is_zero())
                return Outcome{false, "no constant term", engine.to_string()};
            const BigInt kappa1(static_cast<std::int64_t>(k) * (k + 1) / 2);
            if (engine.coeff(un) != BigInt::pow(kappa1, un))
                return same_int(BigInt::pow(kappa1, un), engine.coeff(un));
            const int low = lowest_degree(n, params);
            if (engine.lowest_power() != low)
                return Outcome{false, "lowest power " + std::to_string(low),
                               "lowest power " + std::to_string(engine.lowest_power())};
            return same_int(factorial(n) * binomial(k + 1, n + 1), engine.coeff(1));
        });

        for (const auto& [power, min_k, min_n] :
             {std::tuple{n, 1, 1}, std::tuple{n - 1, 2, 2}, std::tuple{n - 2, 3, 3}, std::tuple{n - 3, 4, 4},
              std::tuple{1, 1, 1}}) {
            if (k < min_k || n < min_n)
                continue;
            const int p = power;
            rec.check(kCoeffClosedForm, n, [&] {
                return same_int(coeff_closed_form(n, params, p), engine.coeff(static_cast<std::size_t>(p)));
            });
        }

        rec.check(kPmfWeights, n, [&] {
            const PmfValue value = pmf(n, params);
            for (const auto& c : value.weight.coeffs())
                if (c.sign() < 0)
                    return Outcome{false, "nonnegative weights", value.weight.to_string()};
            if (k == 1 && (value.weight != LambdaPoly::monomial(1, un) || value.denom != factorial(n)))
                return Outcome{false, "L^" + std::to_string(n) + " / " + factorial(n).to_string(),
                               value.weight.to_string() + " / " + value.denom.to_string()};
            const auto table = pmf_numeric_table(params, 1.0, un);
            const double direct = value.numeric(1.0);
            const auto recursive = static_cast<double>(table[un]);
            const bool close = std::fabs(direct - recursive) <= 1e-12 * std::max(std::fabs(recursive), 1e-300);
            return Outcome{close, "P_n(lambda=1) = " + format_double(recursive),
                           "P_n(lambda=1) = " + format_double(direct)};
        });
    }

    rec.check(kMeanVariance, 2, [&] {
        const LambdaPoly m1 = factorial_moment_poly(1, kappas);
        const LambdaPoly m2 = factorial_moment_poly(2, kappas);
        const std::int64_t kk = k;
        const LambdaPoly expected = LambdaPoly::monomial(BigInt(kk * (kk + 1) * (2 * kk + 1) / 6), 1);
        return same_poly(expected, m2 + m1 - m1 * m1);
    });
    rec.check(kMeanVariance, 1, [&] {
        const LambdaPoly m1 = factorial_moment_poly(1, kappas);
        return same_int(mean(params, 1).to_integer(), m1.coeff(1));
    });

    if (opt.seed && k <= 3) {
        constexpr double kLambda = 0.5;
        const int n_top = std::min(opt.n_max, 3);
        if (n_top >= 1) {
            const SampleSummary s = sample_moments(params, kLambda, n_top, 200'000, *opt.seed, 1);
            for (int n = 1; n <= n_top; ++n) {
                rec.check(kMonteCarlo, n, [&] {
                    const double exact = eval_numeric(factorial_moment_poly(n, kappas), kLambda);
                    const auto i = static_cast<std::size_t>(n - 1);
                    const double z = static_cast<double>((s.estimates[i] - exact) / s.std_errors[i]);
                    return Outcome{std::fabs(z) <= 5.0, "|z| <= 5 around " + format_double(exact),
                                   "z = " + format_double(z)};
                });
            }
        }
    }
    return rec;
}

} // namespace

std::uint64_t VerifyReport::total_checks() const {
    std::uint64_t t = 0;
    for (const auto& f : families)
        t += f.checks;
    return t;
}

std::uint64_t VerifyReport::total_failures() const {
    std::uint64_t t = 0;
    for (const auto& f : families)
        t += f.failures;
    return t;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.k_max < 1)
        throw PreconditionError("verify: k_max must be at least 1");
    if (options.n_max < 0)
        throw PreconditionError("verify: n_max must be nonnegative");

    unsigned workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    std::vector<Recorder> per_order;
    per_order.reserve(static_cast<std::size_t>(options.k_max));
    if (workers == 1) {
        for (int k = 1; k <= options.k_max; ++k)
            per_order.push_back(verify_order(k, options));
    } else {
        std::vector<std::future<Recorder>> pending;
        for (int k = 1; k <= options.k_max; ++k)
            pending.push_back(std::async(std::launch::async, verify_order, k, std::cref(options)));
        for (auto& f : pending)
            per_order.push_back(f.get());
    }

    VerifyReport report;
    for (std::size_t f = 0; f < kFamilyCount; ++f)
        report.families.push_back({kFamilyNames[f], 0, 0});
    for (const Recorder& r : per_order) {
        for (std::size_t f = 0; f < kFamilyCount; ++f) {
            report.families[f].checks += r.families_[f].checks;
            report.families[f].failures += r.families_[f].failures;
        }
        if (!report.first_failure && r.first_)
            report.first_failure = r.first_;
    }
    return report;
}

} // namespace kpoisson::cli
