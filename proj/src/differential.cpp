#include "heaps/differential.hpp"

#include <optional>
#include <sstream>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace heaps {

const char* heap_kind_name(HeapKind k) {
    switch (k) {
        case HeapKind::Fib: return "fib";
        case HeapKind::Pairing: return "pairing";
        case HeapKind::Oracle: return "oracle";
    }
    return "?";
}

namespace {

// invalid-trace detection is the driver's job, kept apart from subject bugs
struct TraceInvalid : ContractViolation {
    using ContractViolation::ContractViolation;
};

template <class H>
std::optional<Seq> min_ordinal(const H& h) {
    auto m = h.find_min();
    if (!m) return std::nullopt;
    if constexpr (std::is_same_v<H, OracleHeap>) {
        return m->first;
    } else {
        return h.seq_of(m->first);
    }
}

template <class H>
void apply_handle_remap(const H& heap, std::vector<typename H::Handle>& table,
                        const std::vector<Seq>& owned,
                        const std::vector<NodeHandle>& remap_by_index,
                        const std::vector<char>& alive) {
    (void)heap;
    for (Seq ord : owned) {
        if (!alive[ord]) continue;
        table[ord] = remap_by_index[table[ord].index];
    }
}

inline void apply_handle_remap(const OracleHeap&, std::vector<OracleHeap::Handle>& table,
                               const std::vector<Seq>& owned,
                               const std::vector<std::pair<OracleHeap::Handle, OracleHeap::Handle>>& remap,
                               const std::vector<char>& alive) {
    std::unordered_map<OracleHeap::Handle, OracleHeap::Handle> m(remap.begin(), remap.end());
    for (Seq ord : owned) {
        if (!alive[ord]) continue;
        table[ord] = m.at(table[ord]);
    }
}

struct Failure {
    std::size_t op_index;
    std::string detail;
};

// shared per-ordinal bookkeeping, tracked by the driver independently of
// both subject and oracle so trace validity is checked up front
template <class SubjHandle>
struct TrackState {
    std::vector<SubjHandle> handle;
    std::vector<Key> key;
    std::vector<char> alive;
    std::vector<std::uint32_t> owner;
    std::uint32_t next_ctx = 0;
    std::size_t exec = 0;

    Seq add(Key k, SubjHandle h, std::uint32_t ctx) {
        handle.push_back(h);
        key.push_back(k);
        alive.push_back(1);
        owner.push_back(ctx);
        return handle.size() - 1;
    }
    void check_target(Seq ord, std::uint32_t ctx) const {
        if (ord >= handle.size() || !alive[ord]) {
            throw TraceInvalid("trace targets a dead or unknown ordinal " + std::to_string(ord));
        }
        if (owner[ord] != ctx) {
            throw TraceInvalid("trace targets ordinal " + std::to_string(ord) +
                               " outside the current heap");
        }
    }
};

// === dual replay: subject + oracle in lockstep ===

template <class H>
struct DualCtx {
    H subject;
    OracleHeap oracle;
    // global ordinal of each local seq; concatenation on merge mirrors the
    // heaps' seq-offset rule exactly
    std::vector<Seq> ordinal_of_local;
    std::uint32_t id;
};

template <class H>
struct DualState {
    TrackState<typename H::Handle> track;
    std::vector<OracleHeap::Handle> oracle_handle;
    bool validate_each;
    std::optional<Failure> failure;
};

template <class H>
bool post_op_checks(DualState<H>& st, DualCtx<H>& ctx, std::size_t exec_idx) {
    auto s = ctx.subject.find_min();
    auto o = ctx.oracle.find_min();
    if (s.has_value() != o.has_value()) {
        st.failure = Failure{exec_idx, std::string("find_min presence diverged: subject=") +
                                           (s ? "some" : "none") + " oracle=" + (o ? "some" : "none")};
        return false;
    }
    if (s) {
        Key sk = s->second;
        Key ok = o->second;
        if (sk != ok) {
            st.failure = Failure{exec_idx, "find_min key diverged: subject=" + std::to_string(sk) +
                                               " oracle=" + std::to_string(ok)};
            return false;
        }
        Seq s_ord = *min_ordinal(ctx.subject);
        if (s_ord != o->first) {
            st.failure = Failure{exec_idx, "find_min node diverged: subject holds ordinal " +
                                               std::to_string(s_ord) + ", oracle ordinal " +
                                               std::to_string(o->first)};
            return false;
        }
    }
    if (st.validate_each) {
        ValidationReport rep = ctx.subject.validate();
        if (!rep.ok) {
            st.failure = Failure{exec_idx, "validator: " + rep.first_violation};
            return false;
        }
    }
    return true;
}

// returns false when a divergence was recorded (stop replaying)
template <class H>
bool run_dual(DualState<H>& st, DualCtx<H>& ctx, const std::vector<TraceOp>& ops) {
    for (const TraceOp& op : ops) {
        std::size_t exec_idx = st.track.exec++;
        switch (op.kind) {
            case TraceOp::Kind::Insert: {
                typename H::Handle sh;
                try {
                    sh = ctx.subject.insert(op.key);
                } catch (const std::exception& e) {
                    st.failure = Failure{exec_idx, std::string("subject threw on insert: ") + e.what()};
                    return false;
                }
                OracleHeap::Handle oh = ctx.oracle.insert(op.key);
                Seq ord = st.track.add(op.key, sh, ctx.id);
                st.oracle_handle.push_back(oh);
                ctx.ordinal_of_local.push_back(ord);
                break;
            }
            case TraceOp::Kind::ExtractMin: {
                auto dying = min_ordinal(ctx.oracle);
                std::optional<Key> s_out;
                try {
                    s_out = ctx.subject.extract_min();
                } catch (const std::exception& e) {
                    st.failure =
                        Failure{exec_idx, std::string("subject threw on extract_min: ") + e.what()};
                    return false;
                }
                std::optional<Key> o_out = ctx.oracle.extract_min();
                if (s_out != o_out) {
                    std::ostringstream os;
                    os << "extract_min diverged: subject=";
                    if (s_out) os << *s_out; else os << "none";
                    os << " oracle=";
                    if (o_out) os << *o_out; else os << "none";
                    st.failure = Failure{exec_idx, os.str()};
                    return false;
                }
                if (dying) st.track.alive[ctx.ordinal_of_local[*dying]] = 0;
                break;
            }
            case TraceOp::Kind::DecreaseKey: {
                st.track.check_target(op.ordinal, ctx.id);
                if (op.key > st.track.key[op.ordinal]) {
                    throw TraceInvalid("trace decrease raises ordinal " +
                                       std::to_string(op.ordinal));
                }
                try {
                    ctx.subject.decrease_key(st.track.handle[op.ordinal], op.key);
                } catch (const std::exception& e) {
                    st.failure =
                        Failure{exec_idx, std::string("subject threw on decrease_key: ") + e.what()};
                    return false;
                }
                ctx.oracle.decrease_key(st.oracle_handle[op.ordinal], op.key);
                st.track.key[op.ordinal] = op.key;
                break;
            }
            case TraceOp::Kind::Delete: {
                st.track.check_target(op.ordinal, ctx.id);
                try {
                    ctx.subject.delete_node(st.track.handle[op.ordinal]);
                } catch (const std::exception& e) {
                    st.failure =
                        Failure{exec_idx, std::string("subject threw on delete: ") + e.what()};
                    return false;
                }
                ctx.oracle.delete_node(st.oracle_handle[op.ordinal]);
                st.track.alive[op.ordinal] = 0;
                break;
            }
            case TraceOp::Kind::Union: {
                DualCtx<H> sub;
                sub.id = ++st.track.next_ctx;
                if (!run_dual(st, sub, op.block)) return false;
                try {
                    auto remap = ctx.subject.merge_from(sub.subject);
                    apply_handle_remap(ctx.subject, st.track.handle, sub.ordinal_of_local, remap,
                                       st.track.alive);
                } catch (const std::exception& e) {
                    st.failure =
                        Failure{exec_idx, std::string("subject threw on union: ") + e.what()};
                    return false;
                }
                auto oremap = ctx.oracle.merge_from(sub.oracle);
                apply_handle_remap(ctx.oracle, st.oracle_handle, sub.ordinal_of_local, oremap,
                                   st.track.alive);
                for (Seq ord : sub.ordinal_of_local) {
                    st.track.owner[ord] = ctx.id;
                    ctx.ordinal_of_local.push_back(ord);
                }
                break;
            }
        }
        if (!post_op_checks(st, ctx, exec_idx)) return false;
    }
    return true;
}

template <class H>
DiffReport run_diff(const OpTrace& trace, const DiffOptions& opts);

template <class H>
DiffReport run_diff_once(const OpTrace& trace, bool validate_each) {
    DualState<H> st;
    st.validate_each = validate_each;
    DualCtx<H> main;
    main.id = 0;
    st.track.next_ctx = 0;
    run_dual(st, main, trace.ops);
    DiffReport rep;
    if (st.failure) {
        rep.ok = false;
        rep.failed_op = st.failure->op_index;
        rep.detail = st.failure->detail;
    }
    return rep;
}

template <class H>
DiffReport run_diff(const OpTrace& trace, const DiffOptions& opts) {
    DiffReport rep = run_diff_once<H>(trace, opts.validate_each_op);
    if (!rep.ok && opts.shrink_on_failure) {
        rep.minimized = shrink_trace(trace, [&](const OpTrace& t) {
            try {
                return !run_diff_once<H>(t, opts.validate_each_op).ok;
            } catch (const TraceInvalid&) {
                return false;  // candidate became invalid; not a failure
            }
        });
    }
    return rep;
}

// === solo replay (no oracle), for metrics collection ===

template <class H>
struct SoloCtx {
    H subject;
    std::vector<Seq> ordinal_of_local;
    std::uint32_t id;
};

template <class H>
struct SoloState {
    TrackState<typename H::Handle> track;
    bool validate_each;
    std::optional<Failure> failure;
};

template <class H>
bool run_solo(SoloState<H>& st, SoloCtx<H>& ctx, const std::vector<TraceOp>& ops) {
    for (const TraceOp& op : ops) {
        std::size_t exec_idx = st.track.exec++;
        switch (op.kind) {
            case TraceOp::Kind::Insert: {
                auto h = ctx.subject.insert(op.key);
                ctx.ordinal_of_local.push_back(st.track.add(op.key, h, ctx.id));
                break;
            }
            case TraceOp::Kind::ExtractMin: {
                auto dying = min_ordinal(ctx.subject);
                ctx.subject.extract_min();
                if (dying) st.track.alive[ctx.ordinal_of_local[*dying]] = 0;
                break;
            }
            case TraceOp::Kind::DecreaseKey: {
                st.track.check_target(op.ordinal, ctx.id);
                if (op.key > st.track.key[op.ordinal]) {
                    throw TraceInvalid("trace decrease raises ordinal " +
                                       std::to_string(op.ordinal));
                }
                ctx.subject.decrease_key(st.track.handle[op.ordinal], op.key);
                st.track.key[op.ordinal] = op.key;
                break;
            }
            case TraceOp::Kind::Delete: {
                st.track.check_target(op.ordinal, ctx.id);
                ctx.subject.delete_node(st.track.handle[op.ordinal]);
                st.track.alive[op.ordinal] = 0;
                break;
            }
            case TraceOp::Kind::Union: {
                SoloCtx<H> sub;
                sub.id = ++st.track.next_ctx;
                if (!run_solo(st, sub, op.block)) return false;
                auto remap = ctx.subject.merge_from(sub.subject);
                apply_handle_remap(ctx.subject, st.track.handle, sub.ordinal_of_local, remap,
                                   st.track.alive);
                for (Seq ord : sub.ordinal_of_local) {
                    st.track.owner[ord] = ctx.id;
                    ctx.ordinal_of_local.push_back(ord);
                }
                break;
            }
        }
        if (st.validate_each) {
            ValidationReport rep = ctx.subject.validate();
            if (!rep.ok) {
                st.failure = Failure{exec_idx, "validator: " + rep.first_violation};
                return false;
            }
        }
    }
    return true;
}

template <class H>
SoloReport run_solo_trace(const OpTrace& trace, bool validate_each, MetricsRecord* metrics_out) {
    SoloState<H> st;
    st.validate_each = validate_each;
    SoloCtx<H> main;
    main.id = 0;
    run_solo(st, main, trace.ops);
    SoloReport rep;
    if (st.failure) {
        rep.ok = false;
        rep.failed_op = st.failure->op_index;
        rep.detail = st.failure->detail;
    }
    if (metrics_out) *metrics_out = main.subject.metrics();
    return rep;
}

}  // namespace

DiffReport differential_run(const OpTrace& trace, HeapKind subject, DiffOptions opts) {
    switch (subject) {
        case HeapKind::Fib: return run_diff<FibHeap>(trace, opts);
        case HeapKind::Pairing: return run_diff<PairingHeap>(trace, opts);
        case HeapKind::Oracle: return run_diff<OracleHeap>(trace, opts);
    }
    throw ContractViolation("unknown subject kind");
}

SoloReport replay_trace(const OpTrace& trace, HeapKind subject, bool validate_each_op,
                        MetricsRecord* metrics_out) {
    switch (subject) {
        case HeapKind::Fib: return run_solo_trace<FibHeap>(trace, validate_each_op, metrics_out);
        case HeapKind::Pairing:
            return run_solo_trace<PairingHeap>(trace, validate_each_op, metrics_out);
        case HeapKind::Oracle:
            return run_solo_trace<OracleHeap>(trace, validate_each_op, metrics_out);
    }
    throw ContractViolation("unknown subject kind");
}

// === shrinking ===

namespace {

struct Rebuild {
    std::size_t unit_counter = 0;
    std::size_t skip_target = 0;
    Seq old_ord = 0;
    Seq new_ord = 0;
    std::unordered_map<Seq, Seq> old_to_new;
};

std::vector<TraceOp> rebuild_without(const std::vector<TraceOp>& ops, Rebuild& b, bool removed) {
    std::vector<TraceOp> out;
    for (const TraceOp& op : ops) {
        bool drop = removed || b.unit_counter == b.skip_target;
        ++b.unit_counter;
        switch (op.kind) {
            case TraceOp::Kind::Insert:
                if (!drop) {
                    b.old_to_new[b.old_ord] = b.new_ord++;
                    out.push_back(op);
                }
                ++b.old_ord;
                break;
            case TraceOp::Kind::ExtractMin:
                if (!drop) out.push_back(op);
                break;
            case TraceOp::Kind::DecreaseKey:
            case TraceOp::Kind::Delete: {
                if (!drop) {
                    auto it = b.old_to_new.find(op.ordinal);
                    if (it != b.old_to_new.end()) {
                        TraceOp copy = op;
                        copy.ordinal = it->second;
                        out.push_back(copy);
                    }
                    // target insert was removed: the op goes with it
                }
                break;
            }
            case TraceOp::Kind::Union: {
                std::vector<TraceOp> sub = rebuild_without(op.block, b, drop);
                if (!drop) out.push_back(TraceOp::union_block(std::move(sub)));
                break;
            }
        }
    }
    return out;
}

std::size_t count_units(const std::vector<TraceOp>& ops) {
    std::size_t n = 0;
    for (const TraceOp& op : ops) {
        ++n;
        if (op.kind == TraceOp::Kind::Union) n += count_units(op.block);
    }
    return n;
}

OpTrace remove_unit(const OpTrace& trace, std::size_t unit) {
    Rebuild b;
    b.skip_target = unit;
    OpTrace out;
    out.ops = rebuild_without(trace.ops, b, false);
    return out;
}

}  // namespace

OpTrace shrink_trace(const OpTrace& trace, const std::function<bool(const OpTrace&)>& fails) {
    if (!fails(trace)) {
        throw std::invalid_argument("shrink_trace: predicate does not fail on the given trace");
    }
    OpTrace cur = trace;
    bool improved = true;
    while (improved) {
        improved = false;
        std::size_t units = count_units(cur.ops);
        for (std::size_t u = units; u-- > 0;) {
            OpTrace cand = remove_unit(cur, u);
            if (cand.op_count() == cur.op_count()) continue;  // nothing removed (shouldn't happen)
            if (fails(cand)) {
                cur = std::move(cand);
                improved = true;
            }
        }
    }
    return cur;
}

}  // namespace heaps
