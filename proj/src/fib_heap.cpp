#include "heaps/fib_heap.hpp"

namespace heaps {

SlotTable::SlotTable(std::uint64_t n) : cap_(slot_index_cap(n)) {
    // covers every n below 2^63 without reallocation for typical sizes
    slots_.assign(cap_ + 1 < 91 ? 91 : cap_ + 1, NodeHandle::null());
}

void SlotTable::place(std::uint32_t d, NodeHandle x, const NodeArena& arena) {
    if (d > cap_) {
        throw DiagnosticError("consolidation slot " + std::to_string(d) +
                              " exceeds ceil(log_phi(n)) + 2 = " + std::to_string(cap_));
    }
    std::uint32_t deg = arena.at(x).degree;
    if (deg != d && deg != d + 1) {
        throw DiagnosticError("slot " + std::to_string(d) + " given a node of degree " +
                              std::to_string(deg));
    }
    if (d >= slots_.size()) slots_.resize(d + 1, NodeHandle::null());
    if (d > highest_used_) highest_used_ = d;
    slots_[d] = x;
}

void FibHeap::append_slot(NodeHandle x, std::uint32_t d, SlotTable& table) {
    NodeHandle y = table.get(d);
    if (!y) {
        // empty slot: fall through to the final placement
    } else if (compare_less(y, x)) {
        if (arena_.at(y).degree == d) {
            // y may be a non-root here; linking through it is what chains
            // ascending runs together
            arena_.list_remove(x);
            link_under_(x, y, link_cap_);
        }
        if (!arena_.at(y).parent) {
            append_slot(y, arena_.at(y).degree, table);
        }
    } else if (!arena_.at(y).parent) {
        // x takes the slot with degree d + 1: darkened, and the degree test
        // above keeps it from gaining another child while it sits here
        arena_.list_remove(y);
        link_under_(y, x, link_cap_);
        if (trace_enabled_) trace_.darkened.emplace_back(d, x);
    }
    table.place(d, x, arena_);
}

void FibHeap::consolidate() {
    ++metrics_.consolidate_calls;
    if (trace_enabled_) trace_ = ConsolidateTrace{};
    link_cap_ = degree_cap(n_);

    SlotTable table(n_);

    // snapshot the old root list oldest-to-newest; links during the scan
    // only ever touch already-scanned nodes
    std::vector<NodeHandle> order = root_list();
    for (NodeHandle x : order) {
        append_slot(x, arena_.at(x).degree, table);
    }

    // rebuild: ascending slot order, roots only; min starts from the
    // provisional handle extract_min left behind
    root_ = NodeHandle::null();
    for (std::uint32_t d = 0; d < table.slots().size(); ++d) {
        NodeHandle x = table.slots()[d];
        if (!x || arena_.at(x).parent) continue;
        arena_.list_remove(x);  // detach from any stale ring membership
        root_append_tail_(x);
        if (compare_less(x, min_)) min_ = x;
        if (trace_enabled_) trace_.final_slots.emplace_back(d, x, arena_.at(x).degree);
    }
    link_cap_ = 0;
}

}  // namespace heaps
