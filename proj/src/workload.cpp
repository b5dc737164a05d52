#include "heaps/workload.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "heaps/presortedness.hpp"

namespace heaps {

GenKind WorkloadSpec::parse_gen(const std::string& text, std::uint64_t& param_out,
                                std::string& path_out) {
    param_out = 0;
    path_out.clear();
    std::string head = text;
    std::string arg;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        head = text.substr(0, pos);
        arg = text.substr(pos + 1);
    }
    auto need_count = [&](GenKind kind) {
        if (arg.empty()) throw ContractViolation("generator '" + head + "' needs an argument");
        param_out = std::stoull(arg);
        if (param_out == 0) throw ContractViolation("generator argument must be positive");
        return kind;
    };
    if (head == "random") return GenKind::Random;
    if (head == "sorted") return GenKind::Sorted;
    if (head == "reverse") return GenKind::Reverse;
    if (head == "runs") return need_count(GenKind::Runs);
    if (head == "swaps") return need_count(GenKind::Swaps);
    if (head == "sawtooth") return need_count(GenKind::Sawtooth);
    if (head == "trace") {
        if (arg.empty()) throw ContractViolation("trace generator needs a file path");
        path_out = arg;
        return GenKind::TraceFile;
    }
    throw ContractViolation("unknown generator: " + text);
}

std::string WorkloadSpec::gen_string() const {
    switch (gen) {
        case GenKind::Random: return "random";
        case GenKind::Sorted: return "sorted";
        case GenKind::Reverse: return "reverse";
        case GenKind::Runs: return "runs:" + std::to_string(param);
        case GenKind::Swaps: return "swaps:" + std::to_string(param);
        case GenKind::Sawtooth: return "sawtooth:" + std::to_string(param);
        case GenKind::TraceFile: return "trace:" + trace_path;
    }
    return "?";
}

std::vector<Key> generate_keys(GenKind gen, std::uint64_t param, std::uint64_t n,
                               std::uint64_t seed) {
    std::vector<Key> keys(n);
    for (std::uint64_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(i + 1);
    Rng rng(seed);
    switch (gen) {
        case GenKind::Sorted:
            break;
        case GenKind::Reverse:
            std::reverse(keys.begin(), keys.end());
            break;
        case GenKind::Random:
            for (std::uint64_t i = n; i > 1; --i) {
                std::swap(keys[i - 1], keys[rng.bounded(i)]);
            }
            break;
        case GenKind::Runs: {
            // shuffle, then sort about `param` random chunks ascending
            for (std::uint64_t i = n; i > 1; --i) {
                std::swap(keys[i - 1], keys[rng.bounded(i)]);
            }
            std::uint64_t r = std::min(param, n);
            std::uint64_t start = 0;
            for (std::uint64_t c = 0; c < r && start < n; ++c) {
                std::uint64_t remaining = n - start;
                std::uint64_t chunks_left = r - c;
                std::uint64_t spread = std::max<std::uint64_t>(1, 2 * remaining / chunks_left);
                std::uint64_t len = (c + 1 == r) ? remaining : 1 + rng.bounded(spread);
                len = std::min(len, remaining);
                std::sort(keys.begin() + static_cast<std::ptrdiff_t>(start),
                          keys.begin() + static_cast<std::ptrdiff_t>(start + len));
                start += len;
            }
            break;
        }
        case GenKind::Swaps:
            for (std::uint64_t s = 0; s < param; ++s) {
                std::uint64_t a = rng.bounded(n);
                std::uint64_t b = rng.bounded(n);
                std::swap(keys[a], keys[b]);
            }
            break;
        case GenKind::Sawtooth:
            // ascending teeth of the given period; duplicates on purpose
            for (std::uint64_t i = 0; i < n; ++i) {
                keys[i] = static_cast<Key>(i % param);
            }
            break;
        case GenKind::TraceFile:
            throw ContractViolation("generate_keys: trace generator has no key sequence");
    }
    return keys;
}

OpTrace generate(const WorkloadSpec& spec) {
    if (spec.gen == GenKind::TraceFile || spec.mode == Mode::Replay) {
        if (spec.trace_path.empty()) throw ContractViolation("replay needs a trace file");
        return OpTrace::load_file(spec.trace_path);
    }
    std::vector<Key> keys = generate_keys(spec.gen, spec.param, spec.n, spec.seed);
    OpTrace trace;
    trace.ops.reserve(2 * keys.size());
    for (Key k : keys) trace.ops.push_back(TraceOp::insert(k));
    if (spec.mode == Mode::Sort) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            trace.ops.push_back(TraceOp::extract_min());
        }
        return trace;
    }
    // dijkstra-like: a few random decrease-keys before every extract
    Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::uint64_t> live(keys.size());
    std::vector<Key> cur(keys);
    for (std::uint64_t i = 0; i < keys.size(); ++i) live[i] = i;
    // extraction removes the smallest; track it so decrease targets stay valid
    auto remove_min = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < live.size(); ++i) {
            std::uint64_t a = live[i], b = live[best];
            if (cur[a] < cur[b] || (cur[a] == cur[b] && a < b)) best = i;
        }
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
    };
    while (!live.empty()) {
        std::uint64_t decreases = rng.bounded(4);
        for (std::uint64_t d = 0; d < decreases && !live.empty(); ++d) {
            std::uint64_t ord = live[rng.bounded(live.size())];
            Key delta = static_cast<Key>(rng.bounded(64));
            Key nk = cur[ord] - delta;
            trace.ops.push_back(TraceOp::decrease_key(ord, nk));
            cur[ord] = nk;
        }
        trace.ops.push_back(TraceOp::extract_min());
        remove_min();
    }
    return trace;
}

namespace {

void random_ops(Rng& rng, std::size_t budget, bool structural, int depth,
                std::vector<TraceOp>& out, std::vector<std::uint64_t>& live,
                std::vector<Key>& cur, std::uint64_t& next_ordinal) {
    std::size_t emitted = 0;
    while (emitted < budget) {
        std::uint64_t roll = rng.bounded(100);
        if (roll < 45 || live.empty()) {
            Key k = rng.range(-1000, 1000);
            out.push_back(TraceOp::insert(k));
            live.push_back(next_ordinal);
            cur.push_back(k);  // cur is indexed by ordinal; inserts keep it dense
            ++next_ordinal;
            ++emitted;
        } else if (roll < 70) {
            out.push_back(TraceOp::extract_min());
            // smallest (key, ordinal) among live leaves the simulation
            std::size_t best = 0;
            for (std::size_t i = 1; i < live.size(); ++i) {
                std::uint64_t a = live[i], b = live[best];
                if (cur[a] < cur[b] || (cur[a] == cur[b] && a < b)) best = i;
            }
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
            ++emitted;
        } else if (roll < 85 && structural) {
            std::uint64_t ord = live[rng.bounded(live.size())];
            Key nk = cur[ord] - static_cast<Key>(rng.bounded(200));
            out.push_back(TraceOp::decrease_key(ord, nk));
            cur[ord] = nk;
            ++emitted;
        } else if (roll < 92 && structural) {
            std::size_t pos = rng.bounded(live.size());
            out.push_back(TraceOp::delete_node(live[pos]));
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
            ++emitted;
        } else if (structural && depth < 2 && budget - emitted >= 6) {
            std::size_t sub_budget = 2 + rng.bounded((budget - emitted) / 2);
            std::vector<TraceOp> block;
            std::vector<std::uint64_t> sub_live;
            random_ops(rng, sub_budget, structural, depth + 1, block, sub_live, cur,
                       next_ordinal);
            out.push_back(TraceOp::union_block(std::move(block)));
            // merged nodes join the current heap
            live.insert(live.end(), sub_live.begin(), sub_live.end());
            emitted += sub_budget + 1;
        } else {
            out.push_back(TraceOp::extract_min());
            if (!live.empty()) {
                std::size_t best = 0;
                for (std::size_t i = 1; i < live.size(); ++i) {
                    std::uint64_t a = live[i], b = live[best];
                    if (cur[a] < cur[b] || (cur[a] == cur[b] && a < b)) best = i;
                }
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
            }
            ++emitted;
        }
    }
}

}  // namespace

OpTrace random_trace(std::uint64_t seed, std::size_t max_len, bool structural_ops) {
    Rng rng(seed);
    std::size_t len = 1 + rng.bounded(max_len);
    OpTrace trace;
    std::vector<std::uint64_t> live;
    std::vector<Key> cur;
    std::uint64_t next_ordinal = 0;
    random_ops(rng, len, structural_ops, 0, trace.ops, live, cur, next_ordinal);
    return trace;
}

std::string MetricsRow::to_csv_line() const {
    std::ostringstream os;
    os << heap << ',' << generator << ',' << n << ',' << seed << ',' << metrics.comparisons << ','
       << metrics.links << ',' << metrics.cuts << ',' << metrics.cascading_cuts << ','
       << metrics.consolidate_cycles << ',' << metrics.max_degree_seen << ',' << runs << ','
       << inversions << ',' << local_min_depth_k << ',' << wall_time_ns;
    return os.str();
}

std::vector<DegreeProbeRow> probe_degree_bound(const std::vector<std::uint64_t>& n_values,
                                               std::uint64_t trials, const WorkloadSpec& base) {
    std::vector<DegreeProbeRow> rows;
    for (std::uint64_t n : n_values) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            for (Mode mode : {Mode::Sort, Mode::DijkstraLike}) {
                WorkloadSpec spec = base;
                spec.heap = HeapKind::Pairing;
                spec.n = n;
                spec.mode = mode;
                RunOutcome oc = run_workload(spec, base.seed + t, false);
                rows.push_back({n, base.seed + t, mode == Mode::Sort ? "sort" : "dijkstra",
                                oc.row.metrics.max_degree_seen});
            }
        }
    }
    return rows;
}

RunOutcome run_workload(const WorkloadSpec& spec, std::uint64_t trial_seed, bool validate) {
    WorkloadSpec trial = spec;
    trial.seed = trial_seed;
    OpTrace trace = generate(trial);

    RunOutcome out;
    out.row.heap = heap_kind_name(spec.heap);
    out.row.generator = trial.gen_string();
    out.row.n = trial.gen == GenKind::TraceFile || trial.mode == Mode::Replay
                    ? trace.insert_count()
                    : trial.n;
    out.row.seed = trial_seed;

    std::vector<Key> keys = trace.insert_keys();
    if (!keys.empty()) {
        out.row.runs = runs_count(keys);
        out.row.inversions = heaps::inversions(keys);
        out.row.local_min_depth_k = local_min_depth(keys).k;
    }

    auto t0 = std::chrono::steady_clock::now();
    MetricsRecord metrics;
    out.report = replay_trace(trace, spec.heap, validate, &metrics);
    auto t1 = std::chrono::steady_clock::now();
    out.row.metrics = metrics;
    out.row.wall_time_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return out;
}

}  // namespace heaps
