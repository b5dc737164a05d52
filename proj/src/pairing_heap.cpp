#include "heaps/pairing_heap.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

namespace heaps {

RootSnapshot PairingHeap::snapshot_from_(NodeHandle anchor) const {
    RootSnapshot snap;
    NodeHandle cur = anchor;
    do {
        snap.emplace_back(cur, arena_.total_key(cur));
        cur = arena_.at(cur).right;
    } while (cur != anchor);
    return snap;
}

void PairingHeap::consolidate() {
    ++metrics_.consolidate_calls;

    std::uint64_t k = 0;
    {
        NodeHandle cur = root_;
        do {
            ++k;
            cur = arena_.at(cur).right;
        } while (cur != root_);
    }

    std::vector<std::pair<NodeHandle, std::uint32_t>> degrees_before;
    if (logging_) {
        log_ = ConsolidateLog{};
        log_.roots_before = k;
        log_.snapshots.push_back(snapshot_from_(root_));
        arena_.for_each_live([&](NodeHandle h) {
            degrees_before.emplace_back(h, arena_.at(h).degree);
        });
    }

    if (k == 1) {
        min_ = root_;
        if (logging_) log_.snapshots.push_back(snapshot_from_(root_));
        return;
    }

    // One full walk of the shrinking circular list per cycle. The loop exits
    // as soon as a single root remains; while more than one remains, the
    // current pointer always sits on a live root, so the walk below is the
    // verbatim previous/current scan.
    const std::uint64_t budget =
        4 * k * static_cast<std::uint64_t>(std::bit_width(k - 1)) + 4;
    std::uint64_t iterations = 0;

    NodeHandle anchor = root_;  // conceptual beginning of the list
    NodeHandle p = root_;
    NodeHandle c = arena_.at(p).right;
    NodeHandle sole;
    std::uint64_t roots_left = k;
    // when the beginning itself is linked away, its successor becomes the
    // beginning but is visited immediately as part of the current lap, so
    // one wrap check must be swallowed
    bool continuing_lap = false;

    while (true) {
        if (++iterations > budget) {
            throw DiagnosticError("consolidate walk exceeded 4*k*ceil(lg k) + 4 iterations (k=" +
                                  std::to_string(k) + ")");
        }
        if (c == anchor) {
            if (continuing_lap) {
                continuing_lap = false;
            } else {
                // the walk wrapped: one cycle completed
                ++metrics_.consolidate_cycles;
                if (logging_) {
                    ++log_.cycles;
                    log_.snapshots.push_back(snapshot_from_(anchor));
                }
            }
        }
        NodeHandle next = arena_.at(c).right;  // capture before any unlinking
        if (compare_less(p, c)) {
            // p may be a non-root it just chained under; link anyway
            arena_.list_remove(c);
            link_under_(c, p, 0);
            if (--roots_left == 1) {
                sole = next;
                break;
            }
            if (c == anchor) {
                anchor = next;
                continuing_lap = true;
            }
        } else if (!arena_.at(p).parent) {
            arena_.list_remove(p);
            link_under_(p, c, 0);
            if (--roots_left == 1) {
                sole = c;
                break;
            }
            if (p == anchor) anchor = c;
        }
        p = c;
        c = next;
    }

    if (arena_.at(sole).parent) {
        throw DiagnosticError("consolidate finished on a non-root");
    }
    min_ = root_ = sole;

    if (logging_) {
        log_.snapshots.push_back(snapshot_from_(sole));
        for (auto [h, before] : degrees_before) {
            std::uint32_t after = arena_.at(h).degree;
            std::uint32_t inc = after > before ? after - before : 0;
            log_.degree_increases.push_back(inc);
            if (inc > log_.max_degree_increase) log_.max_degree_increase = inc;
        }
    }
}

ValidationReport validate_pairing_cycle(const RootSnapshot& before, const RootSnapshot& after) {
    ValidationReport rep;
    std::size_t len = before.size();
    if (len <= 1) return rep;
    std::unordered_set<std::uint64_t> survivors;
    survivors.reserve(after.size() * 2);
    for (const auto& [h, key] : after) {
        survivors.insert((static_cast<std::uint64_t>(h.index) << 32) | h.gen);
    }
    for (std::size_t i = 0; i < len; ++i) {
        const TotalKey& self = before[i].second;
        const TotalKey& left = before[(i + len - 1) % len].second;
        const TotalKey& right = before[(i + 1) % len].second;
        if (!(self < left && self < right)) continue;
        NodeHandle h = before[i].first;
        if (!survivors.count((static_cast<std::uint64_t>(h.index) << 32) | h.gen)) {
            rep.fail("local minimum key=" + std::to_string(self.key) +
                     " missing from the next cycle's root list");
        }
    }
    return rep;
}

ValidationReport validate_degree_growth(std::uint64_t k,
                                        const std::vector<std::uint32_t>& degree_increases) {
    ValidationReport rep;
    if (k < 2) return rep;
    double bound = 2.0 * std::log2(static_cast<double>(k));
    for (std::uint32_t inc : degree_increases) {
        if (static_cast<double>(inc) >= bound) {
            rep.fail("degree increase " + std::to_string(inc) + " not below 2*lg(" +
                     std::to_string(k) + ") = " + std::to_string(bound));
        }
    }
    return rep;
}

}  // namespace heaps
