#ifndef KPOISSON_PARTITIONS_HPP
#define KPOISSON_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "kpoisson/bigint.hpp"

namespace kpoisson {

/// Multiplicity vector (n_1, ..., n_k) of a partition of `weight` into parts
/// of size at most k: n_j counts the parts equal to j, and
/// sum_j j * n_j == weight.
class PartsVector {
public:
    PartsVector(std::vector<std::uint32_t> mults, std::uint32_t weight);

    std::size_t order() const { return m_.size(); }
    std::uint32_t weight() const { return weight_; }
    /// Multiplicity of part size j, 1-based; zero for j > order().
    std::uint32_t mult(std::size_t j) const { return j >= 1 && j <= m_.size() ? m_[j - 1] : 0; }
    const std::vector<std::uint32_t>& mults() const { return m_; }
    /// Total number of parts, sum_j n_j.
    std::uint32_t parts() const;

    friend bool operator==(const PartsVector&, const PartsVector&) = default;
    friend auto operator<=>(const PartsVector&, const PartsVector&) = default;

private:
    friend class WeightedCompositions;
    PartsVector() = default;

    std::vector<std::uint32_t> m_;
    std::uint32_t weight_ = 0;
};

/// All solutions of n_1 + 2 n_2 + ... + k n_k = n, as a restartable range.
///
/// Order is descending colexicographic on (n_k, ..., n_1): the first vector
/// packs as many k's as possible, the last is (n, 0, ..., 0). Iteration keeps
/// a single vector of state, O(k) memory, regardless of how many solutions
/// exist. For n = 0 the only element is the zero vector.
class WeightedCompositions {
public:
    /// Throws PreconditionError when k == 0.
    WeightedCompositions(std::uint32_t n, std::uint32_t k);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = PartsVector;
        using difference_type = std::ptrdiff_t;
        using pointer = const PartsVector*;
        using reference = const PartsVector&;

        iterator() = default;
        reference operator*() const { return cur_; }
        pointer operator->() const { return &cur_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.cur_ == b.cur_);
        }

    private:
        friend class WeightedCompositions;
        iterator(std::uint32_t n, std::uint32_t k);

        PartsVector cur_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, k_); }
    iterator end() const { return iterator(); }

    std::uint32_t weight() const { return n_; }
    std::uint32_t order() const { return k_; }

private:
    std::uint32_t n_;
    std::uint32_t k_;
};

inline WeightedCompositions enumerate_weighted(std::uint32_t n, std::uint32_t k) { return {n, k}; }

/// Number of partitions of n into parts of size at most k, by the recurrence
/// p(n, k) = p(n - k, k) + p(n, k - 1). Never touches the enumerator.
/// Throws PreconditionError when k == 0.
BigInt count_weighted(std::uint32_t n, std::uint32_t k);

} // namespace kpoisson

#endif
