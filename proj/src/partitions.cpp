#include "kpoisson/partitions.hpp"

#include <numeric>

#include "kpoisson/errors.hpp"

namespace kpoisson {

PartsVector::PartsVector(std::vector<std::uint32_t> mults, std::uint32_t weight)
    : m_(std::move(mults)), weight_(weight) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < m_.size(); ++j)
        w += static_cast<std::uint64_t>(j + 1) * m_[j];
    if (w != weight_)
        throw PreconditionError("PartsVector: multiplicities have weight " + std::to_string(w) +
                                ", expected " + std::to_string(weight_));
}

std::uint32_t PartsVector::parts() const {
    return std::accumulate(m_.begin(), m_.end(), std::uint32_t{0});
}

WeightedCompositions::WeightedCompositions(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
    if (k == 0)
        throw PreconditionError("enumerate_weighted: k must be at least 1");
}

namespace {

// Greedily packs `remaining` into slots j = top..1 (1-based), largest first.
void fill_greedy(std::vector<std::uint32_t>& m, std::size_t top, std::uint32_t remaining) {
    for (std::size_t j = top; j >= 1; --j) {
        m[j - 1] = remaining / static_cast<std::uint32_t>(j);
        remaining -= m[j - 1] * static_cast<std::uint32_t>(j);
    }
}

} // namespace

WeightedCompositions::iterator::iterator(std::uint32_t n, std::uint32_t k) : done_(false) {
    cur_.m_.assign(k, 0);
    cur_.weight_ = n;
    fill_greedy(cur_.m_, k, n);
}

WeightedCompositions::iterator& WeightedCompositions::iterator::operator++() {
    if (done_)
        return *this;
    auto& m = cur_.m_;
    // Lowest slot j >= 2 holding a part; everything between 2 and j-1 is empty.
    std::size_t j = 2;
    while (j <= m.size() && m[j - 1] == 0)
        ++j;
    if (j > m.size()) {
        done_ = true;
        return *this;
    }
    --m[j - 1];
    const std::uint32_t freed = static_cast<std::uint32_t>(j) + m[0];
    fill_greedy(m, j - 1, freed);
    return *this;
}

BigInt count_weighted(std::uint32_t n, std::uint32_t k) {
    if (k == 0)
        throw PreconditionError("count_weighted: k must be at least 1");
    // row[m] holds p(m, j) for the current part bound j.
    std::vector<BigInt> row(n + 1, BigInt(0));
    row[0] = 1;
    for (std::uint32_t j = 1; j <= k; ++j)
        for (std::uint32_t m = j; m <= n; ++m)
            row[m] += row[m - j];
    return row[n];
}

} // namespace kpoisson
