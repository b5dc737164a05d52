#include "heaps/heap_base.hpp"

#include <string>
#include <vector>

namespace heaps {

namespace {

std::string node_desc(const NodeArena& arena, NodeHandle h) {
    const NodeRecord& r = arena.at(h);
    return "node(key=" + std::to_string(r.key) + ", seq=" + std::to_string(r.seq) + ")";
}

// checks x.right.left == x and x.left.right == x around a full lap
bool ring_consistent(const NodeArena& arena, NodeHandle anchor) {
    NodeHandle cur = anchor;
    do {
        const NodeRecord& r = arena.at(cur);
        if (arena.at(r.right).left != cur || arena.at(r.left).right != cur) return false;
        cur = r.right;
    } while (cur != anchor);
    return true;
}

}  // namespace

ValidationReport HeapCore::validate_structure_(bool check_child_degree_bound,
                                               bool check_degree_cap) const {
    ValidationReport rep;
    if (n_ == 0) {
        if (min_ || root_) rep.fail("empty heap has a min or root handle");
        if (arena_.live_count() != 0) rep.fail("empty heap holds live arena nodes");
        return rep;
    }
    if (!arena_.valid(min_)) {
        rep.fail("min handle invalid");
        return rep;
    }
    if (!arena_.valid(root_)) {
        rep.fail("root anchor handle invalid");
        return rep;
    }
    if (arena_.at(min_).parent) rep.fail("min is not a root");
    if (arena_.at(root_).parent) rep.fail("root anchor is not a root");
    if (!ring_consistent(arena_, root_)) {
        rep.fail("root list circular links inconsistent");
        return rep;
    }

    std::uint32_t cap = check_degree_cap ? degree_cap(n_) : 0;
    std::uint64_t reached = 0;
    bool min_seen = false;

    std::vector<NodeHandle> stack;
    NodeHandle r = root_;
    do {
        const NodeRecord& rr = arena_.at(r);
        if (rr.parent) rep.fail("root list contains a node with a parent: " + node_desc(arena_, r));
        if (rr.mark) rep.fail("marked root: " + node_desc(arena_, r));
        if (r == min_) min_seen = true;
        if (arena_.raw_less(r, min_)) {
            rep.fail("root " + node_desc(arena_, r) + " is smaller than min");
        }
        stack.push_back(r);
        r = rr.right;
    } while (r != root_);

    while (!stack.empty()) {
        NodeHandle x = stack.back();
        stack.pop_back();
        ++reached;
        const NodeRecord& xr = arena_.at(x);
        if (check_degree_cap && xr.degree > cap) {
            rep.fail(node_desc(arena_, x) + " degree " + std::to_string(xr.degree) +
                     " exceeds cap " + std::to_string(cap));
        }
        if (!xr.child) {
            if (xr.degree != 0) rep.fail(node_desc(arena_, x) + " has degree but no children");
            continue;
        }
        if (!ring_consistent(arena_, xr.child)) {
            rep.fail("child list of " + node_desc(arena_, x) + " inconsistent");
            continue;
        }
        std::uint32_t count = 0;
        NodeHandle c = xr.child;
        do {
            const NodeRecord& cr = arena_.at(c);
            ++count;
            if (cr.parent != x) {
                rep.fail("child " + node_desc(arena_, c) + " does not point back to " +
                         node_desc(arena_, x));
            }
            if (!arena_.raw_less(x, c)) {
                rep.fail("heap order violated: " + node_desc(arena_, x) + " !< child " +
                         node_desc(arena_, c));
            }
            if (check_child_degree_bound && static_cast<std::int64_t>(cr.degree) <
                                                static_cast<std::int64_t>(count) - 2) {
                rep.fail("child-degree bound violated at " + node_desc(arena_, x) + ": child #" +
                         std::to_string(count) + " (" + node_desc(arena_, c) + ") has degree " +
                         std::to_string(cr.degree));
            }
            stack.push_back(c);
            c = cr.right;
        } while (c != xr.child);
        if (count != xr.degree) {
            rep.fail(node_desc(arena_, x) + " degree " + std::to_string(xr.degree) +
                     " != child count " + std::to_string(count));
        }
    }

    if (!min_seen) rep.fail("min is not on the root list");
    if (reached != n_) {
        rep.fail("reachable nodes " + std::to_string(reached) + " != n " + std::to_string(n_));
    }
    if (arena_.live_count() != n_) {
        rep.fail("live arena nodes " + std::to_string(arena_.live_count()) + " != n " +
                 std::to_string(n_));
    }
    return rep;
}

}  // namespace heaps
