#ifndef HEAPS_HEAP_BASE_HPP
#define HEAPS_HEAP_BASE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "heaps/core.hpp"
#include "heaps/validation.hpp"

namespace heaps {

/// State and operations shared by both heap variants: the standard
/// Fibonacci-heap insert / find-min / union / decrease-key / delete with
/// marks and cascading cuts. The variants differ only in how consolidate()
/// rebuilds trees after extract-min.
///
/// The root list is circular and keeps arrival order: `root()` anchors its
/// oldest element, new roots (inserts, cuts, spliced children) are appended
/// at the tail, and iteration from the anchor rightward walks oldest to
/// newest.
///
/// A heap instance is single-threaded; distinct instances are independent.
class HeapCore {
public:
    HeapCore() = default;
    HeapCore(const HeapCore&) = default;
    HeapCore(HeapCore&&) = default;
    HeapCore& operator=(const HeapCore&) = default;
    HeapCore& operator=(HeapCore&&) = default;
    virtual ~HeapCore() = default;

    NodeHandle insert(Key key);
    std::optional<std::pair<NodeHandle, Key>> find_min() const;
    std::optional<Key> extract_min();

    /// new_key must not exceed the node's current key.
    void decrease_key(NodeHandle x, Key new_key);

    /// Remove an arbitrary node: sink it below every key with the
    /// minus-infinity sentinel, then extract.
    void delete_node(NodeHandle x);

    /// Instrumented strict total-order comparison; exactly one comparison
    /// is counted per call.
    bool compare_less(NodeHandle a, NodeHandle b) {
        ++metrics_.comparisons;
        return arena_.raw_less(a, b);
    }

    std::uint64_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    NodeHandle min_handle() const { return min_; }
    NodeHandle root_handle() const { return root_; }
    Key key_of(NodeHandle h) const { return arena_.at(h).key; }
    Seq seq_of(NodeHandle h) const { return arena_.at(h).seq; }

    using Handle = NodeHandle;

    const MetricsRecord& metrics() const { return metrics_; }
    MetricsRecord snapshot_and_reset_metrics() {
        MetricsRecord out = metrics_;
        metrics_ = MetricsRecord{};
        return out;
    }

    const NodeArena& arena() const { return arena_; }

    virtual ValidationReport validate() const = 0;

    /// Roots in arrival order (oldest first), for tests and reports.
    std::vector<NodeHandle> root_list() const;

protected:
    virtual void consolidate() = 0;

    /// Full-traversal structural check shared by both variants: circular-list
    /// consistency of the root list and every child list, parent/degree
    /// bookkeeping, heap order under the raw total order, unmarked roots, min
    /// minimality among roots, and reachable count == n == live arena count.
    /// Optionally checks the child-degree bound (y_i.degree >= i - 2, children
    /// in link order) and the max-degree cap floor(log_phi(n)) + 1.
    ValidationReport validate_structure_(bool check_child_degree_bound,
                                         bool check_degree_cap) const;

    /// Shared UNION: absorbs `other` (root list appended after this heap's
    /// tail, seqs offset by this heap's next insertion ordinal so the total
    /// order stays strict). Returns other's old-slot-index -> new-handle
    /// table; `other` is left empty.
    std::vector<NodeHandle> merge_from_base(HeapCore& other);

    void root_append_tail_(NodeHandle x) { root_ = arena_.list_append_tail(root_, x); }

    /// Make `child` (detached, parentless) the newest child of `parent`.
    /// degree_cap 0 disables the diagnostic bound check.
    void link_under_(NodeHandle child, NodeHandle parent, std::uint32_t cap);

    void cut_(NodeHandle x, NodeHandle parent);
    void cascading_cut_(NodeHandle y);
    void cut_if_violating_and_update_min_(NodeHandle x);

    NodeArena arena_;
    NodeHandle min_;
    NodeHandle root_;
    std::uint64_t n_ = 0;
    Seq next_seq_ = 0;
    MetricsRecord metrics_;
};

/// Canonical one-line rendering "key[child child ...] ..." with roots and
/// children in stored (arrival / link) order. Test and report helper; only
/// sensible on small heaps.
std::string structure_string(const HeapCore& h);

}  // namespace heaps

#endif  // HEAPS_HEAP_BASE_HPP
