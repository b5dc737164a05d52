#ifndef HEAPS_DIFFERENTIAL_HPP
#define HEAPS_DIFFERENTIAL_HPP

#include <functional>
#include <string>

#include "heaps/fib_heap.hpp"
#include "heaps/oracle.hpp"
#include "heaps/pairing_heap.hpp"
#include "heaps/trace.hpp"

namespace heaps {

enum class HeapKind { Fib, Pairing, Oracle };

const char* heap_kind_name(HeapKind k);

struct DiffOptions {
    bool validate_each_op = true;
    bool shrink_on_failure = false;
};

struct DiffReport {
    bool ok = true;
    std::size_t failed_op = 0;  // execution index (file order, nested ops counted)
    std::string detail;
    OpTrace minimized;  // populated when shrinking was requested and failed
};

/// Replays `trace` on the chosen subject and on the reference oracle in
/// lockstep. Extract-min and find-min outputs are compared after every
/// operation (including which node holds the min, via insertion ordinals),
/// and the subject's structure validator runs per op when requested. The
/// first divergence stops the run; with shrinking enabled the failing trace
/// is reduced to a locally minimal one.
DiffReport differential_run(const OpTrace& trace, HeapKind subject, DiffOptions opts = {});

/// Replays `trace` on a single heap without the oracle, for metrics runs.
struct SoloReport {
    bool ok = true;
    std::size_t failed_op = 0;
    std::string detail;
};
SoloReport replay_trace(const OpTrace& trace, HeapKind subject, bool validate_each_op,
                        MetricsRecord* metrics_out = nullptr);

/// Delta-debugging over op removal: repeatedly drops single ops (union
/// blocks drop as a unit; decrease/delete ops whose insert disappears are
/// dropped with it, and surviving ordinals are renumbered) while the
/// predicate keeps failing. Returns a locally minimal failing trace.
/// Throws std::invalid_argument if the predicate does not fail on `trace`.
OpTrace shrink_trace(const OpTrace& trace, const std::function<bool(const OpTrace&)>& fails);

}  // namespace heaps

#endif  // HEAPS_DIFFERENTIAL_HPP
