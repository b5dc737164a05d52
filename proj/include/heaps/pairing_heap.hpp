#ifndef HEAPS_PAIRING_HEAP_HPP
#define HEAPS_PAIRING_HEAP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "heaps/heap_base.hpp"

namespace heaps {

/// Root-list snapshot taken at a consolidation cycle boundary, in circular
/// order starting at the conceptual list beginning.
using RootSnapshot = std::vector<std::pair<NodeHandle, TotalKey>>;

/// Per-consolidate instrumentation captured when cycle logging is on.
struct ConsolidateLog {
    std::uint64_t roots_before = 0;  // k
    std::uint64_t cycles = 0;        // wrap events of the walk
    /// snapshots[0] is the list at entry (l_0), then one per completed
    /// cycle, then the final single-root list.
    std::vector<RootSnapshot> snapshots;
    /// degree increase per node that was live at entry, unordered.
    std::vector<std::uint32_t> degree_increases;
    std::uint32_t max_degree_increase = 0;
};

/// Pairing-like heap: same top-level operations as FibHeap, but
/// consolidation walks the circular root list with a previous/current
/// pointer pair, linking the larger neighbor under the smaller, looping
/// until a single root remains. Degree is maintained for instrumentation
/// and validators only; the algorithm never reads it.
class PairingHeap : public HeapCore {
public:
    std::vector<NodeHandle> merge_from(PairingHeap& other) { return merge_from_base(other); }

    /// Structural validation without the Fibonacci child-degree bound or the
    /// log-phi degree cap (no proven degree bound exists for this variant;
    /// the probes measure it instead).
    ValidationReport validate() const override { return validate_structure_(false, false); }

    void set_cycle_logging(bool on) { logging_ = on; }
    const ConsolidateLog& last_consolidate_log() const { return log_; }

protected:
    void consolidate() override;

private:
    RootSnapshot snapshot_from_(NodeHandle anchor) const;

    bool logging_ = false;
    ConsolidateLog log_;
};

/// Local-minimum survival check on two consecutive root-list snapshots:
/// every circular local minimum of `before` (strictly smaller than both of
/// its circular neighbors) must appear in `after`. Singleton lists pass
/// vacuously.
ValidationReport validate_pairing_cycle(const RootSnapshot& before, const RootSnapshot& after);

/// Degree-growth check for one consolidation: with k >= 2 roots
/// beforehand, every node's degree increase must be < 2 * lg(k). k <= 1 is
/// vacuous.
ValidationReport validate_degree_growth(std::uint64_t k,
                                        const std::vector<std::uint32_t>& degree_increases);

}  // namespace heaps

#endif  // HEAPS_PAIRING_HEAP_HPP
