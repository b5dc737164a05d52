#ifndef HEAPS_FIB_HEAP_HPP
#define HEAPS_FIB_HEAP_HPP

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "heaps/heap_base.hpp"

namespace heaps {

/// Consolidation array indexed by degree. Sized generously up front and
/// grown on demand; any slot index above ceil(log_phi(n)) + 2 for the
/// heap's current size is a diagnostic error, as is parking a node whose
/// degree is neither d nor d + 1 ("darkened").
class SlotTable {
public:
    explicit SlotTable(std::uint64_t n);

    NodeHandle get(std::uint32_t d) const {
        return d < slots_.size() ? slots_[d] : NodeHandle::null();
    }
    void place(std::uint32_t d, NodeHandle x, const NodeArena& arena);

    std::uint32_t cap() const { return cap_; }
    std::uint32_t highest_used() const { return highest_used_; }
    const std::vector<NodeHandle>& slots() const { return slots_; }

private:
    std::vector<NodeHandle> slots_;
    std::uint32_t cap_;
    std::uint32_t highest_used_ = 0;
};

/// Fibonacci heap whose consolidation walks the root list in arrival order
/// and re-links runs as it goes, preserving the order adaptivity of the
/// input.
class FibHeap : public HeapCore {
public:
    std::vector<NodeHandle> merge_from(FibHeap& other) { return merge_from_base(other); }

    /// Full structural validation including the child-degree bound
    /// (children y_1..y_k in link order satisfy y_i.degree >= i - 2) and the
    /// max-degree cap floor(log_phi(n)) + 1.
    ValidationReport validate() const override { return validate_structure_(true, true); }

    // --- consolidation trace, for tests ---
    struct ConsolidateTrace {
        /// (slot, node) events where a root was linked under the slot
        /// occupant, leaving the occupant at slot d with degree d + 1.
        std::vector<std::pair<std::uint32_t, NodeHandle>> darkened;
        /// (slot, node, degree) occupancy when the slot scan rebuilt the list.
        std::vector<std::tuple<std::uint32_t, NodeHandle, std::uint32_t>> final_slots;
    };
    void set_trace_enabled(bool on) { trace_enabled_ = on; }
    const ConsolidateTrace& last_consolidate_trace() const { return trace_; }

    /// Slot insertion step of consolidation (one node, one slot). Public
    /// because it is an operation in its own right; pre: x is parentless and
    /// detached from any sibling ring, d == x.degree.
    void append_slot(NodeHandle x, std::uint32_t d, SlotTable& table);

protected:
    void consolidate() override;

private:
    bool trace_enabled_ = false;
    ConsolidateTrace trace_;
    std::uint32_t link_cap_ = 0;  // degree cap during the current consolidate
};

}  // namespace heaps

#endif  // HEAPS_FIB_HEAP_HPP
