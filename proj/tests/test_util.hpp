#ifndef HEAPS_TEST_UTIL_HPP
#define HEAPS_TEST_UTIL_HPP

#include <array>
#include <span>
#include <vector>

#include "heaps/core.hpp"

namespace heaps::test {

// the worked-example insertion sequence used across the suite
inline constexpr std::array<Key, 14> kExampleSeq = {11, 13, 6, 10, 1, 8, 14, 12, 9, 5, 4, 3, 7, 2};

template <class H>
std::vector<NodeHandle> insert_all(H& h, std::span<const Key> keys) {
    std::vector<NodeHandle> handles;
    handles.reserve(keys.size());
    for (Key k : keys) handles.push_back(h.insert(k));
    return handles;
}

template <class H>
std::vector<Key> extract_all(H& h) {
    std::vector<Key> out;
    while (auto k = h.extract_min()) out.push_back(*k);
    return out;
}

}  // namespace heaps::test

#endif
