#include "kpoisson/moments.hpp"

#include <cmath>
#include <string>

#include "kpoisson/combinatorics.hpp"
#include "kpoisson/errors.hpp"
#include "kpoisson/partitions.hpp"

namespace kpoisson {

namespace {

void require_n(int n, const char* what) {
    if (n < 0)
        throw DomainError(std::string(what) + ": n must be nonnegative, got " + std::to_string(n));
}

void require_lambda(const BigRational& lambda, const char* what) {
    if (lambda.sign() < 0)
        throw DomainError(std::string(what) + ": lambda must be nonnegative, got " + lambda.to_string());
}

// n! / prod(n_j!) for one multiplicity vector; integral because sum n_j <= n.
BigInt multinomial_prefactor(const BigInt& n_factorial, const PartsVector& v) {
    BigInt denom = 1;
    for (std::uint32_t m : v.mults())
        if (m > 1)
            denom *= factorial(m);
    const BigRational ratio(n_factorial, denom);
    if (!ratio.is_integer())
        throw InternalInconsistency("prefactor n!/prod(n_j!) not integral for weight " +
                                    std::to_string(v.weight()));
    return ratio.num();
}

} // namespace

OrderParams::OrderParams(int k) : k_(k) {
    if (k < 1)
        throw PreconditionError("order k must be at least 1, got " + std::to_string(k));
}

BigInt kappa(const OrderParams& params, int j) {
    if (j < 1)
        throw PreconditionError("kappa: j must be at least 1, got " + std::to_string(j));
    if (j > params.k())
        return 0;
    return binomial(params.k() + 1, j + 1);
}

KappaTable::KappaTable(const OrderParams& params) {
    values_.reserve(static_cast<std::size_t>(params.k()));
    for (int j = 1; j <= params.k(); ++j)
        values_.push_back(kappa(params, j));
}

const BigInt& KappaTable::at(int j) const {
    if (j < 1)
        throw PreconditionError("KappaTable: j must be at least 1");
    return j <= order() ? values_[static_cast<std::size_t>(j - 1)] : zero_;
}

KappaTable KappaTable::with_value(int j, BigInt value) const {
    if (j < 1 || j > order())
        throw PreconditionError("KappaTable::with_value: j out of range");
    KappaTable copy = *this;
    copy.values_[static_cast<std::size_t>(j - 1)] = std::move(value);
    return copy;
}

LambdaPoly factorial_moment_poly(int n, const OrderParams& params) {
    return factorial_moment_poly(n, KappaTable(params));
}

LambdaPoly factorial_moment_poly(int n, const KappaTable& kappas) {
    require_n(n, "factorial_moment_poly");
    const BigInt n_factorial = factorial(n);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (const PartsVector& v : enumerate_weighted(static_cast<std::uint32_t>(n),
                                                   static_cast<std::uint32_t>(kappas.order()))) {
        BigInt term = multinomial_prefactor(n_factorial, v);
        for (int j = 1; j <= kappas.order(); ++j)
            if (const std::uint32_t m = v.mult(static_cast<std::size_t>(j)); m > 0)
                term *= BigInt::pow(kappas.at(j), m);
        coeffs[v.parts()] += term;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i].sign() < 0)
            throw InternalInconsistency("factorial_moment_poly: negative coefficient at power " +
                                        std::to_string(i));
    return LambdaPoly(std::move(coeffs));
}

LambdaPoly order2_moment_poly(int n) {
    require_n(n, "order2_moment_poly");
    const BigInt kappa1 = 3;
    const BigInt kappa2 = 1;
    const BigInt n_factorial = factorial(n);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int s = 0; 2 * s <= n; ++s) {
        const BigInt c = BigInt::divexact(n_factorial, factorial(n - 2 * s) * factorial(s)) *
                         BigInt::pow(kappa1, static_cast<unsigned>(n - 2 * s)) *
                         BigInt::pow(kappa2, static_cast<unsigned>(s));
        coeffs[static_cast<std::size_t>(n - s)] += c;
    }
    return LambdaPoly(std::move(coeffs));
}

BigRational PmfValue::rational_part(const BigRational& lam) const {
    return weight.eval(lam) / BigRational(denom);
}

double PmfValue::numeric(double lam) const {
    if (!(lam >= 0.0))
        throw DomainError("pmf: lambda must be nonnegative");
    const double log_denom = denom.log_abs();
    long double sum = 0.0L;
    for (std::size_t m = 0; m < weight.coeffs().size(); ++m) {
        const BigInt& c = weight.coeffs()[m];
        if (c.is_zero())
            continue;
        if (m > 0 && lam == 0.0)
            continue;
        const long double log_term = static_cast<long double>(c.log_abs()) - log_denom +
                                     (m > 0 ? static_cast<long double>(m) * std::log(static_cast<long double>(lam)) : 0.0L) -
                                     static_cast<long double>(k) * lam;
        sum += std::exp(log_term);
    }
    return static_cast<double>(sum);
}

double PmfValue::numeric() const {
    if (!lambda)
        throw PreconditionError("PmfValue::numeric: no lambda attached");
    return numeric(lambda->to_double());
}

PmfValue pmf(int n, const OrderParams& params) {
    require_n(n, "pmf");
    const BigInt n_factorial = factorial(n);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (const PartsVector& v :
         enumerate_weighted(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(params.k())))
        coeffs[v.parts()] += multinomial_prefactor(n_factorial, v);

    BigInt g = n_factorial;
    for (const auto& c : coeffs)
        g = BigInt::gcd(g, c);
    for (auto& c : coeffs)
        c = BigInt::divexact(c, g);

    PmfValue out;
    out.k = params.k();
    out.n = n;
    out.weight = IntPoly(std::move(coeffs));
    out.denom = BigInt::divexact(n_factorial, g);
    return out;
}

PmfValue pmf(int n, const OrderParams& params, const BigRational& lambda) {
    require_lambda(lambda, "pmf");
    PmfValue out = pmf(n, params);
    out.lambda = lambda;
    return out;
}

BigRational mean(const OrderParams& params, const BigRational& lambda) {
    require_lambda(lambda, "mean");
    const std::int64_t k = params.k();
    return BigRational(k * (k + 1), 2) * lambda;
}

BigRational variance(const OrderParams& params, const BigRational& lambda) {
    require_lambda(lambda, "variance");
    const std::int64_t k = params.k();
    return BigRational(k * (k + 1) * (2 * k + 1), 6) * lambda;
}

BigInt coeff_closed_form(int n, const OrderParams& params, int power) {
    const std::int64_t k = params.k();
    const std::int64_t nn = n;

    struct Form {
        std::int64_t power;
        std::int64_t min_k;
        std::int64_t min_n;
        const char* label;
    };
    const Form forms[] = {
        {nn, 1, 1, "lambda^n"},
        {nn - 1, 2, 2, "lambda^(n-1)"},
        {nn - 2, 3, 3, "lambda^(n-2)"},
        {nn - 3, 4, 4, "lambda^(n-3)"},
        {1, 1, 1, "lambda^1"},
    };

    const Form* chosen = nullptr;
    const Form* first_violated = nullptr;
    for (const Form& f : forms) {
        if (f.power != power)
            continue;
        if (k >= f.min_k && nn >= f.min_n) {
            chosen = &f;
            break;
        }
        if (!first_violated)
            first_violated = &f;
    }
    if (!chosen) {
        if (!first_violated)
            throw DomainError("coeff_closed_form: no closed form for power " + std::to_string(power) +
                              " of M_(" + std::to_string(n) + "); supported powers are n, n-1, n-2, n-3 and 1");
        throw DomainError(std::string("coeff_closed_form: the ") + first_violated->label +
                          " closed form holds only for k >= " + std::to_string(first_violated->min_k) +
                          " and n >= " + std::to_string(first_violated->min_n) + " (got k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }

    const BigRational a(BigInt(k * (k + 1)), BigInt(2));
    auto a_pow = [&](std::int64_t e) {
        BigRational r = 1;
        for (std::int64_t i = 0; i < e; ++i)
            r *= a;
        return r;
    };
    BigRational value;
    if (chosen == &forms[0]) {
        value = a_pow(nn);
    } else if (chosen == &forms[1]) {
        value = BigRational(BigInt(nn * (nn - 1)), BigInt(3)) * a_pow(nn - 1) * BigRational(k - 1);
    } else if (chosen == &forms[2]) {
        value = BigRational(1, 6) * BigRational(binomial(nn, 3)) * a_pow(nn - 2) * BigRational(k - 1) *
                BigRational((2 * nn - 3) * k - 2 * nn);
    } else if (chosen == &forms[3]) {
        const std::int64_t bracket = (10 * nn * nn - 45 * nn + 47) * k * k - 5 * (4 * nn * nn - 9 * nn - 1) * k +
                                     2 * (5 * nn * nn + 1);
        value = BigRational(2, 135) * BigRational(binomial(nn, 4)) * a_pow(nn - 3) * BigRational(k - 1) *
                BigRational(bracket);
    } else {
        value = BigRational(factorial(nn) * binomial(k + 1, nn + 1));
    }
    if (!value.is_integer())
        throw InternalInconsistency(std::string("coeff_closed_form: ") + chosen->label +
                                    " closed form produced a non-integer " + value.to_string());
    return value.num();
}

int lowest_degree(int n, const OrderParams& params) {
    if (n < 1)
        throw DomainError("lowest_degree: n must be at least 1, got " + std::to_string(n));
    return (n + params.k() - 1) / params.k();
}

LambdaPoly variance_identity_poly(const OrderParams& params) {
    const LambdaPoly m1 = factorial_moment_poly(1, params);
    const LambdaPoly m2 = factorial_moment_poly(2, params);
    return m2 + m1 - m1 * m1;
}

BigRational variance_from_factorials(const OrderParams& params, const BigRational& lambda) {
    require_lambda(lambda, "variance_from_factorials");
    return variance_identity_poly(params).eval(lambda);
}

double eval_numeric(const LambdaPoly& p, double lambda) {
    long double acc = 0.0L;
    const auto x = static_cast<long double>(lambda);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + BigRational(*it).to_long_double();
    return static_cast<double>(acc);
}

} // namespace kpoisson
