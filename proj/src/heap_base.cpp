#include "heaps/heap_base.hpp"

#include <sstream>

namespace heaps {

NodeHandle HeapCore::insert(Key key) {
    NodeHandle x = arena_.allocate(key, next_seq_++);
    root_append_tail_(x);
    if (!min_) {
        min_ = x;
    } else if (compare_less(x, min_)) {
        min_ = x;
    }
    ++n_;
    return x;
}

std::optional<std::pair<NodeHandle, Key>> HeapCore::find_min() const {
    if (!min_) return std::nullopt;
    return std::make_pair(min_, arena_.at(min_).key);
}

std::optional<Key> HeapCore::extract_min() {
    if (!min_) return std::nullopt;
    NodeHandle z = min_;
    NodeRecord& zr = arena_.at(z);

    // splice z's children to the root-list tail, earliest-linked first;
    // becoming a root clears the mark
    std::uint32_t children = zr.degree;
    for (std::uint32_t i = 0; i < children; ++i) {
        NodeHandle c = arena_.at(z).child;
        NodeHandle next = arena_.at(c).right;
        arena_.list_remove(c);
        arena_.at(z).child = (next == c) ? NodeHandle::null() : next;
        NodeRecord& cr = arena_.at(c);
        cr.parent = NodeHandle::null();
        cr.mark = false;
        root_append_tail_(c);
    }
    arena_.at(z).degree = 0;

    Key out = arena_.at(z).key;
    if (arena_.at(z).right == z) {
        // z was the sole node
        root_ = NodeHandle::null();
        min_ = NodeHandle::null();
    } else {
        NodeHandle succ = arena_.at(z).right;
        arena_.list_remove(z);
        if (root_ == z) root_ = succ;  // the next-oldest becomes the anchor
        min_ = succ;                   // provisional; consolidate fixes it
        consolidate();
    }
    --n_;
    arena_.release(z);
    return out;
}

void HeapCore::decrease_key(NodeHandle x, Key new_key) {
    NodeRecord& xr = arena_.at(x);
    if (new_key > xr.key) {
        throw ContractViolation("decrease_key: new key exceeds current key");
    }
    xr.key = new_key;
    cut_if_violating_and_update_min_(x);
}

void HeapCore::delete_node(NodeHandle x) {
    arena_.at(x).neg_inf = true;  // below every representable key
    cut_if_violating_and_update_min_(x);
    extract_min();
}

void HeapCore::cut_if_violating_and_update_min_(NodeHandle x) {
    NodeHandle p = arena_.at(x).parent;
    if (p && compare_less(x, p)) {
        cut_(x, p);
        cascading_cut_(p);
    }
    if (compare_less(x, min_)) min_ = x;
}

void HeapCore::link_under_(NodeHandle child, NodeHandle parent, std::uint32_t cap) {
    NodeRecord& cr = arena_.at(child);
    cr.parent = parent;
    cr.mark = false;
    NodeRecord& pr = arena_.at(parent);
    pr.child = arena_.list_append_tail(pr.child, child);
    ++pr.degree;
    ++metrics_.links;
    if (pr.degree > metrics_.max_degree_seen) metrics_.max_degree_seen = pr.degree;
    if (cap != 0 && pr.degree > cap) {
        throw DiagnosticError("degree " + std::to_string(pr.degree) +
                              " exceeds floor(log_phi(n)) + 1 = " + std::to_string(cap));
    }
}

void HeapCore::cut_(NodeHandle x, NodeHandle parent) {
    NodeRecord& pr = arena_.at(parent);
    NodeHandle next = arena_.at(x).right;
    arena_.list_remove(x);
    if (pr.child == x) pr.child = (next == x) ? NodeHandle::null() : next;
    --pr.degree;
    NodeRecord& xr = arena_.at(x);
    xr.parent = NodeHandle::null();
    xr.mark = false;
    root_append_tail_(x);
    ++metrics_.cuts;
}

void HeapCore::cascading_cut_(NodeHandle y) {
    while (true) {
        NodeHandle z = arena_.at(y).parent;
        if (!z) return;
        if (!arena_.at(y).mark) {
            arena_.at(y).mark = true;
            return;
        }
        ++metrics_.cascading_cuts;
        cut_(y, z);
        y = z;
    }
}

std::vector<NodeHandle> HeapCore::merge_from_base(HeapCore& other) {
    Seq base = next_seq_;
    NodeHandle other_root = other.root_;
    NodeHandle other_min = other.min_;
    std::vector<NodeHandle> remap = arena_.import_from(other.arena_, base);

    if (other_root) {
        NodeHandle mapped_root = remap[other_root.index];
        NodeHandle mapped_min = remap[other_min.index];
        root_ = arena_.list_concat(root_, mapped_root);
        if (!min_) {
            min_ = mapped_min;
        } else if (compare_less(mapped_min, min_)) {
            min_ = mapped_min;
        }
    }
    n_ += other.n_;
    next_seq_ = base + other.next_seq_;
    metrics_ += other.metrics_;

    other.min_ = NodeHandle::null();
    other.root_ = NodeHandle::null();
    other.n_ = 0;
    other.next_seq_ = 0;
    other.metrics_ = MetricsRecord{};
    return remap;
}

std::vector<NodeHandle> HeapCore::root_list() const {
    std::vector<NodeHandle> out;
    if (!root_) return out;
    NodeHandle cur = root_;
    do {
        out.push_back(cur);
        cur = arena_.at(cur).right;
    } while (cur != root_);
    return out;
}

namespace {

void append_subtree(std::ostringstream& os, const NodeArena& arena, NodeHandle x) {
    const NodeRecord& r = arena.at(x);
    os << r.key;
    if (r.child) {
        os << '[';
        NodeHandle c = r.child;
        bool first = true;
        do {
            if (!first) os << ' ';
            first = false;
            append_subtree(os, arena, c);
            c = arena.at(c).right;
        } while (c != r.child);
        os << ']';
    }
}

}  // namespace

std::string structure_string(const HeapCore& h) {
    std::ostringstream os;
    bool first = true;
    for (NodeHandle r : h.root_list()) {
        if (!first) os << ' ';
        first = false;
        append_subtree(os, h.arena(), r);
    }
    return os.str();
}

}  // namespace heaps
