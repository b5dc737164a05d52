#ifndef HEAPS_CORE_HPP
#define HEAPS_CORE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace heaps {

using Key = std::int64_t;
using Seq = std::uint64_t;

/// Misuse of the public API: invalid handle, key increase, relinking a
/// linked node, malformed trace input.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A structural bound that the data structure is supposed to guarantee was
/// exceeded (slot index, degree cap, consolidate iteration budget). These
/// are loud so a broken invariant cannot pass silently.
struct DiagnosticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Index + generation into a heap's node arena. Generation makes stale
/// handles detectable after a slot is recycled.
struct NodeHandle {
    std::uint32_t index = kNullIndex;
    std::uint32_t gen = 0;

    static constexpr std::uint32_t kNullIndex = std::numeric_limits<std::uint32_t>::max();

    static constexpr NodeHandle null() { return NodeHandle{}; }
    constexpr bool is_null() const { return index == kNullIndex; }
    explicit constexpr operator bool() const { return !is_null(); }

    friend constexpr bool operator==(NodeHandle a, NodeHandle b) {
        return a.index == b.index && a.gen == b.gen;
    }
    friend constexpr bool operator!=(NodeHandle a, NodeHandle b) { return !(a == b); }
};

/// Strict total order over keys: lexicographic (sentinel, key, seq).
/// The minus-infinity sentinel used by delete sorts below every key and is
/// a flag, not a stored key value.
struct TotalKey {
    bool neg_inf = false;
    Key key = 0;
    Seq seq = 0;

    friend bool operator<(const TotalKey& a, const TotalKey& b) {
        if (a.neg_inf != b.neg_inf) return a.neg_inf;
        if (a.key != b.key) return a.key < b.key;
        return a.seq < b.seq;
    }
    friend bool operator==(const TotalKey& a, const TotalKey& b) {
        return a.neg_inf == b.neg_inf && a.key == b.key && a.seq == b.seq;
    }
};

/// Operation counters. Monotone over a heap's lifetime; reset only through
/// snapshot_and_reset().
struct MetricsRecord {
    std::uint64_t comparisons = 0;
    std::uint64_t links = 0;
    std::uint64_t cuts = 0;
    std::uint64_t cascading_cuts = 0;
    std::uint64_t consolidate_calls = 0;
    std::uint64_t consolidate_cycles = 0;
    std::uint64_t max_degree_seen = 0;

    MetricsRecord& operator+=(const MetricsRecord& o) {
        comparisons += o.comparisons;
        links += o.links;
        cuts += o.cuts;
        cascading_cuts += o.cascading_cuts;
        consolidate_calls += o.consolidate_calls;
        consolidate_cycles += o.consolidate_cycles;
        if (o.max_degree_seen > max_degree_seen) max_degree_seen = o.max_degree_seen;
        return *this;
    }
};

struct NodeRecord {
    Key key = 0;
    Seq seq = 0;
    std::uint32_t degree = 0;
    bool mark = false;
    bool neg_inf = false;
    NodeHandle parent;
    NodeHandle child;  // earliest-linked child; siblings form a circular list
    NodeHandle left;
    NodeHandle right;
};

/// Flat node store for one heap. Freed slots are recycled through a free
/// list; handles carry a generation so a recycled slot invalidates old
/// handles. Circular doubly-linked list primitives live here because they
/// are pure link surgery on records.
class NodeArena {
public:
    NodeHandle allocate(Key key, Seq seq);
    void release(NodeHandle h);

    bool valid(NodeHandle h) const {
        return h.index < slots_.size() && live_[h.index] && gens_[h.index] == h.gen;
    }

    NodeRecord& at(NodeHandle h) {
        check_(h);
        return slots_[h.index];
    }
    const NodeRecord& at(NodeHandle h) const {
        check_(h);
        return slots_[h.index];
    }

    TotalKey total_key(NodeHandle h) const {
        const NodeRecord& r = at(h);
        return TotalKey{r.neg_inf, r.key, r.seq};
    }

    /// Un-instrumented order test, for validators and oracles only.
    bool raw_less(NodeHandle a, NodeHandle b) const { return total_key(a) < total_key(b); }

    std::size_t live_count() const { return live_count_; }
    std::size_t slot_count() const { return slots_.size(); }
    bool slot_live(std::uint32_t index) const { return index < live_.size() && live_[index]; }
    NodeHandle handle_at(std::uint32_t index) const { return NodeHandle{index, gens_[index]}; }

    // --- circular doubly-linked list primitives ---

    /// Append x at the tail of the list anchored at `anchor` (anchor = oldest,
    /// anchor.left = newest). Returns the new anchor. x must be detached.
    NodeHandle list_append_tail(NodeHandle anchor, NodeHandle x);

    /// Splice x out of whatever list it is in, leaving it detached
    /// (x.left == x.right == x). Removing the anchor is the caller's problem:
    /// it must re-anchor at the former x.right.
    void list_remove(NodeHandle x);

    /// Concatenate the list anchored at b after the tail of the list anchored
    /// at a. Returns the combined anchor.
    NodeHandle list_concat(NodeHandle a, NodeHandle b);

    /// Move every live node of `other` into this arena, offsetting seqs by
    /// `seq_offset` and rewriting all internal links. Returns a table mapping
    /// other's old slot index to the new handle (null for dead slots).
    /// `other` is left empty.
    std::vector<NodeHandle> import_from(NodeArena& other, Seq seq_offset);

    void clear();

    template <class Fn>
    void for_each_live(Fn&& fn) const {
        for (std::uint32_t i = 0; i < slots_.size(); ++i) {
            if (live_[i]) fn(NodeHandle{i, gens_[i]});
        }
    }

private:
    void check_(NodeHandle h) const {
        if (!valid(h)) throw ContractViolation("invalid node handle");
    }

    std::vector<NodeRecord> slots_;
    std::vector<std::uint32_t> gens_;
    std::vector<bool> live_;
    std::vector<std::uint32_t> free_;
    std::size_t live_count_ = 0;
};

/// Largest f with phi^f <= n (phi the golden ratio); n >= 1.
std::uint32_t floor_log_phi(std::uint64_t n);

/// Max degree a Fibonacci-style heap of n nodes may show at any instant;
/// the +1 admits the transient darkened state inside consolidation.
inline std::uint32_t degree_cap(std::uint64_t n) { return floor_log_phi(n) + 1; }

/// Hard cap on consolidation slot indices: ceil(log_phi(n)) + 2.
std::uint32_t slot_index_cap(std::uint64_t n);

}  // namespace heaps

#endif  // HEAPS_CORE_HPP
