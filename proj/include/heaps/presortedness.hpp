#ifndef HEAPS_PRESORTEDNESS_HPP
#define HEAPS_PRESORTEDNESS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "heaps/core.hpp"

namespace heaps {

/// Number of maximal non-decreasing contiguous segments. |X| >= 1.
std::uint64_t runs_count(std::span<const Key> x);

/// Number of pairs (i, j) with i < j and X[i] > X[j], in O(n log n). |X| >= 1.
std::uint64_t inversions(std::span<const Key> x);

/// The local-minima depth measure: m_0 = X, m_{i+1} = the linear local
/// minima of m_i in order (first element counts iff smaller than its
/// successor, last iff smaller than its predecessor, interior iff smaller
/// than both), and k is the smallest index with |m_k| = 1. Duplicates are
/// made distinct by original position, carried through every level.
/// chain[0] is X itself; a singleton input gives k = 0.
struct LocalMinDepth {
    std::uint64_t k = 0;
    std::vector<std::vector<Key>> chain;
};
LocalMinDepth local_min_depth(std::span<const Key> x);

}  // namespace heaps

#endif  // HEAPS_PRESORTEDNESS_HPP
