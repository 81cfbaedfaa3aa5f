// Test-only reference computations. Nothing here calls into the library's
// enumeration, moment engine or series code; each helper is a brute-force
// or textbook route used to freeze expected values.
#ifndef KPOISSON_TESTS_ORACLE_UTIL_HPP
#define KPOISSON_TESTS_ORACLE_UTIL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "kpoisson/bigint.hpp"
#include "kpoisson/poly.hpp"

namespace oracle {

using kpoisson::BigInt;
using kpoisson::BigRational;
using kpoisson::IntPoly;

// C(a, b) from an explicit Pascal triangle.
inline std::uint64_t pascal(int a, int b) {
    if (b < 0 || b > a)
        return 0;
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(a) + 1);
    for (int i = 0; i <= a; ++i) {
        t[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[a][b];
}

inline BigInt product_factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= BigInt(i);
    return r;
}

// Visits every (n_1..n_k) with sum j n_j == n by nested recursion on n_k
// first; independent of the library's successor iterator.
inline void for_each_solution(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int j, int remaining) {
        if (j == 0) {
            if (remaining == 0)
                visit(m);
            return;
        }
        for (int c = remaining / j; c >= 0; --c) {
            m[static_cast<std::size_t>(j - 1)] = c;
            rec(j - 1, remaining - c * j);
        }
        m[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(k, n);
}

// The combinatorial moment sum evaluated directly with rationals: for each
// solution, n! * prod (kappa_j^{n_j} / n_j!) at lambda^{sum n_j}, with
// kappa_j = C(k+1, j+1) from the Pascal triangle.
inline IntPoly brute_moment(int n, int k) {
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for_each_solution(n, k, [&](const std::vector<int>& m) {
        BigRational term = BigRational(product_factorial(n));
        int parts = 0;
        for (int j = 1; j <= k; ++j) {
            const int nj = m[static_cast<std::size_t>(j - 1)];
            parts += nj;
            const BigInt kap(static_cast<std::int64_t>(pascal(k + 1, j + 1)));
            for (int r = 0; r < nj; ++r)
                term *= BigRational(kap);
            term /= BigRational(product_factorial(nj));
        }
        c[static_cast<std::size_t>(parts)] += term;
    });
    std::vector<BigInt> out;
    for (const auto& x : c)
        out.push_back(x.to_integer());
    return IntPoly(std::move(out));
}

// The general-k table of M_(1)..M_(6) written in terms of kappa_1..kappa_6,
// transcribed term by term.
inline IntPoly kappa_table_moment(int n, int k) {
    auto K = [&](int j) { return BigInt(static_cast<std::int64_t>(pascal(k + 1, j + 1))); };
    auto P = [](const BigInt& b, unsigned e) { return BigInt::pow(b, e); };
    const BigInt k1 = K(1), k2 = K(2), k3 = K(3), k4 = K(4), k5 = K(5), k6 = K(6);
    switch (n) {
    case 1:
        return IntPoly{0, k1};
    case 2:
        return IntPoly{0, BigInt(2) * k2, P(k1, 2)};
    case 3:
        return IntPoly{0, BigInt(6) * k3, BigInt(6) * k1 * k2, P(k1, 3)};
    case 4:
        return IntPoly{0, BigInt(24) * k4, BigInt(12) * P(k2, 2) + BigInt(24) * k1 * k3, BigInt(12) * P(k1, 2) * k2,
                       P(k1, 4)};
    case 5:
        return IntPoly{0,
                       BigInt(120) * k5,
                       BigInt(120) * k1 * k4 + BigInt(120) * k2 * k3,
                       BigInt(60) * k1 * P(k2, 2) + BigInt(60) * P(k1, 2) * k3,
                       BigInt(20) * P(k1, 3) * k2,
                       P(k1, 5)};
    case 6:
        return IntPoly{0,
                       BigInt(720) * k6,
                       BigInt(720) * k1 * k5 + BigInt(720) * k2 * k4 + BigInt(360) * P(k3, 2),
                       BigInt(360) * P(k1, 2) * k4 + BigInt(120) * P(k2, 3) + BigInt(720) * k1 * k2 * k3,
                       BigInt(180) * P(k1, 2) * P(k2, 2) + BigInt(120) * P(k1, 3) * k3,
                       BigInt(30) * P(k1, 4) * k2,
                       P(k1, 6)};
    default:
        return {};
    }
}

// Random small integer polynomial for property tests.
inline IntPoly random_poly(std::mt19937_64& rng, int max_degree = 5, int max_abs = 20) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    const int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i)
        c.emplace_back(val(rng));
    return IntPoly(std::move(c));
}

inline BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    return BigRational(BigInt(num(rng)), BigInt(den(rng)));
}

} // namespace oracle

#endif
