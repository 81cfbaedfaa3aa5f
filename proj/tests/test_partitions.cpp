#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "kpoisson/errors.hpp"
#include "kpoisson/partitions.hpp"
#include "oracle_util.hpp"

using namespace kpoisson;

namespace {

using Mults = std::vector<std::uint32_t>;

std::vector<Mults> collect(std::uint32_t n, std::uint32_t k) {
    std::vector<Mults> out;
    for (const PartsVector& v : enumerate_weighted(n, k))
        out.push_back(v.mults());
    return out;
}

// Number of partitions of n into parts <= k by the classic p(n, k) table.
std::uint64_t table_count(int n, int k) {
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    for (int j = 0; j <= k; ++j)
        p[0][static_cast<std::size_t>(j)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= k; ++j)
            p[m][j] = p[m][j - 1] + (m >= j ? p[m - j][j] : 0);
    return p[n][k];
}

} // namespace

TEST(Enumerate, FourIntoPartsUpToTwo) {
    const auto all = collect(4, 2);
    ASSERT_EQ(all.size(), 3U);
    EXPECT_EQ(std::set<Mults>(all.begin(), all.end()), (std::set<Mults>{{4, 0}, {2, 1}, {0, 2}}));
    // descending colex: the all-ones vector comes last
    EXPECT_EQ(all, (std::vector<Mults>{{0, 2}, {2, 1}, {4, 0}}));
}

TEST(Enumerate, ZeroWeight) {
    const auto all = collect(0, 5);
    ASSERT_EQ(all.size(), 1U);
    EXPECT_EQ(all.front(), (Mults{0, 0, 0, 0, 0}));
}

TEST(Enumerate, SixIntoPartsUpToThree) {
    std::set<Mults> brute;
    for (std::uint32_t n3 = 0; n3 <= 2; ++n3)
        for (std::uint32_t n2 = 0; n2 <= 3; ++n2)
            if (3 * n3 + 2 * n2 <= 6)
                brute.insert({6 - 3 * n3 - 2 * n2, n2, n3});
    EXPECT_EQ(brute.size(), 7U);
    const auto all = collect(6, 3);
    EXPECT_EQ(all.size(), 7U);
    EXPECT_EQ(std::set<Mults>(all.begin(), all.end()), brute);
}

TEST(Enumerate, LastIsAllOnes) {
    for (std::uint32_t n = 1; n <= 12; ++n)
        for (std::uint32_t k = 1; k <= 6; ++k) {
            const auto all = collect(n, k);
            Mults ones(k, 0);
            ones[0] = n;
            EXPECT_EQ(all.back(), ones);
        }
}

TEST(Enumerate, ZeroOrderRejected) {
    EXPECT_THROW(enumerate_weighted(3, 0), PreconditionError);
    EXPECT_THROW(count_weighted(3, 0), PreconditionError);
}

TEST(Enumerate, RestartableRange) {
    const auto range = enumerate_weighted(7, 3);
    std::vector<Mults> first, second;
    for (const auto& v : range)
        first.push_back(v.mults());
    for (const auto& v : range)
        second.push_back(v.mults());
    EXPECT_EQ(first, second);
}

TEST(Count, Values) {
    EXPECT_EQ(count_weighted(4, 2), BigInt(3));
    EXPECT_EQ(count_weighted(6, 3), BigInt(7));
    for (std::uint32_t n = 0; n <= 40; ++n)
        EXPECT_EQ(count_weighted(n, 1), BigInt(1));
}

TEST(Count, MatchesTable) {
    for (int n = 0; n <= 60; ++n)
        for (int k = 1; k <= 12; ++k)
            EXPECT_EQ(count_weighted(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)),
                      BigInt(static_cast<std::int64_t>(table_count(n, k))));
}

TEST(PartsVectorType, Accessors) {
    const PartsVector v({2, 1, 0}, 4);
    EXPECT_EQ(v.weight(), 4U);
    EXPECT_EQ(v.order(), 3U);
    EXPECT_EQ(v.mult(1), 2U);
    EXPECT_EQ(v.mult(2), 1U);
    EXPECT_EQ(v.mult(9), 0U);
    EXPECT_EQ(v.parts(), 3U);
    EXPECT_THROW(PartsVector({1, 1}, 4), PreconditionError);
}

TEST(EnumerateProperty, StreamMatchesRecurrenceAndWeights) {
    for (std::uint32_t n = 0; n <= 30; ++n)
        for (std::uint32_t k = 1; k <= 10; ++k) {
            std::uint64_t count = 0;
            std::set<Mults> seen;
            for (const PartsVector& v : enumerate_weighted(n, k)) {
                std::uint64_t w = 0;
                for (std::size_t j = 1; j <= k; ++j)
                    w += j * v.mult(j);
                ASSERT_EQ(w, n);
                ASSERT_EQ(v.order(), k);
                seen.insert(v.mults());
                ++count;
            }
            EXPECT_EQ(seen.size(), count) << "duplicates at n=" << n << " k=" << k;
            EXPECT_EQ(BigInt(static_cast<std::int64_t>(count)), count_weighted(n, k));
        }
}

TEST(EnumerateProperty, MatchesNestedLoopOracle) {
    for (int n = 0; n <= 16; ++n)
        for (int k = 1; k <= 6; ++k) {
            std::set<Mults> expected;
            oracle::for_each_solution(n, k, [&](const std::vector<int>& m) { expected.insert(Mults(m.begin(), m.end())); });
            const auto all = collect(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
            EXPECT_EQ(std::set<Mults>(all.begin(), all.end()), expected);
        }
}

TEST(EnumerateProperty, PartsAboveWeightVanish) {
    for (std::uint32_t n = 0; n <= 8; ++n)
        for (std::uint32_t k = n; k <= n + 3; ++k) {
            if (k == 0)
                continue;
            for (const PartsVector& v : enumerate_weighted(n, k))
                for (std::size_t j = n + 1; j <= k; ++j)
                    EXPECT_EQ(v.mult(j), 0U);
        }
}

TEST(EnumerateProperty, DescendingColexOrder) {
    // Compare from the highest index down: each successor is strictly smaller.
    for (std::uint32_t n = 0; n <= 15; ++n)
        for (std::uint32_t k = 1; k <= 6; ++k) {
            const auto all = collect(n, k);
            for (std::size_t i = 1; i < all.size(); ++i) {
                const Mults a(all[i - 1].rbegin(), all[i - 1].rend());
                const Mults b(all[i].rbegin(), all[i].rend());
                EXPECT_GT(a, b);
            }
        }
}
