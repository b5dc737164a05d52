#include "heaps/core.hpp"

#include <cmath>

namespace heaps {

NodeHandle NodeArena::allocate(Key key, Seq seq) {
    std::uint32_t index;
    if (!free_.empty()) {
        index = free_.back();
        free_.pop_back();
        ++gens_[index];
    } else {
        index = static_cast<std::uint32_t>(slots_.size());
        slots_.emplace_back();
        gens_.push_back(0);
        live_.push_back(false);
    }
    NodeHandle h{index, gens_[index]};
    NodeRecord& r = slots_[index];
    r = NodeRecord{};
    r.key = key;
    r.seq = seq;
    r.left = h;
    r.right = h;
    live_[index] = true;
    ++live_count_;
    return h;
}

void NodeArena::release(NodeHandle h) {
    check_(h);
    live_[h.index] = false;
    free_.push_back(h.index);
    --live_count_;
}

NodeHandle NodeArena::list_append_tail(NodeHandle anchor, NodeHandle x) {
    NodeRecord& xr = at(x);
    if (xr.left != x || xr.right != x) {
        throw ContractViolation("list_append_tail: node is already linked into a list");
    }
    if (!anchor) return x;
    NodeRecord& ar = at(anchor);
    NodeHandle tail = ar.left;
    xr.left = tail;
    xr.right = anchor;
    at(tail).right = x;
    ar.left = x;
    return anchor;
}

void NodeArena::list_remove(NodeHandle x) {
    NodeRecord& xr = at(x);
    NodeHandle l = xr.left;
    NodeHandle r = xr.right;
    if (l != x) {
        at(l).right = r;
        at(r).left = l;
    }
    xr.left = x;
    xr.right = x;
}

NodeHandle NodeArena::list_concat(NodeHandle a, NodeHandle b) {
    if (!a) return b;
    if (!b) return a;
    NodeHandle a_tail = at(a).left;
    NodeHandle b_tail = at(b).left;
    at(a_tail).right = b;
    at(b).left = a_tail;
    at(b_tail).right = a;
    at(a).left = b_tail;
    return a;
}

std::vector<NodeHandle> NodeArena::import_from(NodeArena& other, Seq seq_offset) {
    std::vector<NodeHandle> remap(other.slot_count(), NodeHandle::null());
    for (std::uint32_t i = 0; i < other.slot_count(); ++i) {
        if (!other.slot_live(i)) continue;
        const NodeRecord& src = other.slots_[i];
        NodeHandle h = allocate(src.key, src.seq + seq_offset);
        NodeRecord& dst = slots_[h.index];
        dst.degree = src.degree;
        dst.mark = src.mark;
        dst.neg_inf = src.neg_inf;
        // links rewritten below once every node has a new handle
        dst.parent = src.parent;
        dst.child = src.child;
        dst.left = src.left;
        dst.right = src.right;
        remap[i] = h;
    }
    auto fix = [&](NodeHandle old_link) -> NodeHandle {
        if (!old_link) return NodeHandle::null();
        if (old_link.index >= remap.size() || !remap[old_link.index]) {
            throw ContractViolation("import_from: dangling link in source arena");
        }
        return remap[old_link.index];
    };
    for (std::uint32_t i = 0; i < other.slot_count(); ++i) {
        if (!remap[i]) continue;
        NodeRecord& dst = slots_[remap[i].index];
        dst.parent = fix(dst.parent);
        dst.child = fix(dst.child);
        dst.left = fix(dst.left);
        dst.right = fix(dst.right);
    }
    other.clear();
    return remap;
}

void NodeArena::clear() {
    slots_.clear();
    gens_.clear();
    live_.clear();
    free_.clear();
    live_count_ = 0;
}

std::uint32_t floor_log_phi(std::uint64_t n) {
    if (n == 0) throw ContractViolation("floor_log_phi: n must be >= 1");
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    std::uint32_t f = 0;
    long double p = 1.0L;
    while (p * phi <= static_cast<long double>(n)) {
        p *= phi;
        ++f;
    }
    return f;
}

std::uint32_t slot_index_cap(std::uint64_t n) {
    if (n <= 1) return 2;
    return floor_log_phi(n) + 1 + 2;  // ceil(log_phi(n)) == floor + 1 for n >= 2
}

}  // namespace heaps
