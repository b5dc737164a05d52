#include "heaps/presortedness.hpp"

#include <utility>

namespace heaps {

std::uint64_t runs_count(std::span<const Key> x) {
    if (x.empty()) throw ContractViolation("runs_count: empty sequence");
    std::uint64_t runs = 1;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] < x[i - 1]) ++runs;
    }
    return runs;
}

namespace {

std::uint64_t merge_count(std::vector<Key>& a, std::vector<Key>& tmp, std::size_t lo,
                          std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[j] < a[i]) {
            inv += mid - i;  // a[j] precedes every remaining left element it undercuts
            tmp[k++] = a[j++];
        } else {
            tmp[k++] = a[i++];
        }
    }
    while (i < mid) tmp[k++] = a[i++];
    while (j < hi) tmp[k++] = a[j++];
    for (std::size_t t = lo; t < hi; ++t) a[t] = tmp[t];
    return inv;
}

}  // namespace

std::uint64_t inversions(std::span<const Key> x) {
    if (x.empty()) throw ContractViolation("inversions: empty sequence");
    std::vector<Key> a(x.begin(), x.end());
    std::vector<Key> tmp(a.size());
    return merge_count(a, tmp, 0, a.size());
}

LocalMinDepth local_min_depth(std::span<const Key> x) {
    if (x.empty()) throw ContractViolation("local_min_depth: empty sequence");

    using Elem = std::pair<Key, std::size_t>;  // (value, original position)
    auto less = [](const Elem& a, const Elem& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    };

    LocalMinDepth out;
    std::vector<Elem> level;
    level.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) level.emplace_back(x[i], i);

    auto record = [&](const std::vector<Elem>& lv) {
        std::vector<Key> keys;
        keys.reserve(lv.size());
        for (const Elem& e : lv) keys.push_back(e.first);
        out.chain.push_back(std::move(keys));
    };
    record(level);

    while (level.size() > 1) {
        std::vector<Elem> next;
        std::size_t n = level.size();
        for (std::size_t i = 0; i < n; ++i) {
            bool ok_left = (i == 0) || less(level[i], level[i - 1]);
            bool ok_right = (i + 1 == n) || less(level[i], level[i + 1]);
            if (i == 0) {
                if (ok_right) next.push_back(level[i]);
            } else if (i + 1 == n) {
                if (ok_left) next.push_back(level[i]);
            } else if (ok_left && ok_right) {
                next.push_back(level[i]);
            }
        }
        level = std::move(next);
        record(level);
        ++out.k;
    }
    return out;
}

}  // namespace heaps
