#ifndef HEAPS_WORKLOAD_HPP
#define HEAPS_WORKLOAD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heaps/differential.hpp"
#include "heaps/trace.hpp"

namespace heaps {

/// mt19937_64 with a rejection-sampled bounded draw so generated traces do
/// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// uniform in [0, n), n >= 1
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw ContractViolation("Rng::bounded: empty range");
        std::uint64_t threshold = (0 - n) % n;
        while (true) {
            std::uint64_t v = eng_();
            if (v >= threshold) return v % n;
        }
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(
                        bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return bounded(den) < num; }

private:
    std::mt19937_64 eng_;
};

enum class GenKind { Random, Sorted, Reverse, Runs, Swaps, Sawtooth, TraceFile };
enum class Mode { Sort, DijkstraLike, Replay };

struct WorkloadSpec {
    GenKind gen = GenKind::Random;
    std::uint64_t param = 0;  // runs:R, swaps:S, sawtooth:P
    std::string trace_path;   // trace:FILE
    std::uint64_t n = 0;
    std::uint64_t seed = 1;
    HeapKind heap = HeapKind::Fib;
    Mode mode = Mode::Sort;

    /// Parses the CLI syntax random|sorted|reverse|runs:R|swaps:S|sawtooth:P|trace:FILE.
    static GenKind parse_gen(const std::string& text, std::uint64_t& param_out,
                             std::string& path_out);
    std::string gen_string() const;
};

/// The input key sequence a workload inserts, deterministic in
/// (gen, param, n, seed).
std::vector<Key> generate_keys(GenKind gen, std::uint64_t param, std::uint64_t n,
                               std::uint64_t seed);

/// Deterministic trace for a workload: sort mode is n inserts then n
/// extracts; dijkstra-like interleaves seeded decrease-keys before each
/// extract; replay loads spec.trace_path verbatim.
OpTrace generate(const WorkloadSpec& spec);

/// Random operation trace for differential testing: inserts, extracts and
/// (optionally) decrease-key / delete / nested unions, always valid by
/// construction. Length is at most max_len counting nested ops.
OpTrace random_trace(std::uint64_t seed, std::size_t max_len, bool structural_ops);

/// One CSV row per (spec, trial). Header is fixed; bump the version suffix
/// if columns ever change.
struct MetricsRow {
    std::string heap;
    std::string generator;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    MetricsRecord metrics;
    std::uint64_t runs = 0;
    std::uint64_t inversions = 0;
    std::uint64_t local_min_depth_k = 0;
    std::uint64_t wall_time_ns = 0;

    std::string to_csv_line() const;
};

inline constexpr const char* kMetricsCsvHeaderV1 =
    "heap,generator,n,seed,comparisons,links,cuts,cascading_cuts,consolidate_cycles,"
    "max_degree,runs,inversions,local_min_depth_k,wall_time_ns";

struct RunOutcome {
    MetricsRow row;
    SoloReport report;
};

/// Generates the trace, replays it on spec.heap with optional per-op
/// validation, and fills a metrics row (presortedness measured on the
/// trace's insert keys; wall time covers the replay only).
RunOutcome run_workload(const WorkloadSpec& spec, std::uint64_t trial_seed, bool validate);

/// One measurement for the open question whether the pairing variant's
/// degree stays logarithmic: max degree observed over a full
/// insert/extract-all pass and a decrease-key-heavy pass. Data only;
/// nothing is asserted about the values.
struct DegreeProbeRow {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string workload;  // "sort" or "dijkstra"
    std::uint64_t max_degree = 0;
};
std::vector<DegreeProbeRow> probe_degree_bound(const std::vector<std::uint64_t>& n_values,
                                               std::uint64_t trials, const WorkloadSpec& base);

}  // namespace heaps

#endif  // HEAPS_WORKLOAD_HPP
