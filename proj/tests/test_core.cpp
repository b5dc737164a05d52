#include <doctest.h>

#include "heaps/core.hpp"
#include "heaps/fib_heap.hpp"

using namespace heaps;

TEST_CASE("list_append_tail keeps arrival order") {
    NodeArena arena;
    NodeHandle a = arena.allocate(1, 0);

    SUBCASE("appending to empty anchors the node as a singleton") {
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), a);
        CHECK(anchor == a);
        CHECK(arena.at(a).left == a);
        CHECK(arena.at(a).right == a);
    }

    SUBCASE("second node lands right of the anchor") {
        NodeHandle b = arena.allocate(2, 1);
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), a);
        anchor = arena.list_append_tail(anchor, b);
        CHECK(anchor == a);
        CHECK(arena.at(a).right == b);
        CHECK(arena.at(b).right == a);
        CHECK(arena.at(a).left == b);
    }

    SUBCASE("iteration from the anchor rightward is arrival order") {
        NodeHandle n11 = arena.allocate(11, 1);
        NodeHandle n13 = arena.allocate(13, 2);
        NodeHandle n6 = arena.allocate(6, 3);
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), n11);
        anchor = arena.list_append_tail(anchor, n13);
        anchor = arena.list_append_tail(anchor, n6);
        std::vector<Key> seen;
        NodeHandle cur = anchor;
        do {
            seen.push_back(arena.at(cur).key);
            cur = arena.at(cur).right;
        } while (cur != anchor);
        CHECK(seen == std::vector<Key>{11, 13, 6});
    }

    SUBCASE("appending an already linked node is a structural error") {
        NodeHandle b = arena.allocate(2, 1);
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), a);
        anchor = arena.list_append_tail(anchor, b);
        CHECK_THROWS_AS(arena.list_append_tail(anchor, b), ContractViolation);
    }
}

TEST_CASE("list_remove splices neighbors and detaches the node") {
    NodeArena arena;
    NodeHandle a = arena.allocate(1, 0);
    NodeHandle b = arena.allocate(2, 1);
    NodeHandle c = arena.allocate(3, 2);

    SUBCASE("middle removal from [a,b,c]") {
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), a);
        anchor = arena.list_append_tail(anchor, b);
        anchor = arena.list_append_tail(anchor, c);
        arena.list_remove(b);
        CHECK(arena.at(a).right == c);
        CHECK(arena.at(c).left == a);
        CHECK(arena.at(b).left == b);
        CHECK(arena.at(b).right == b);
    }

    SUBCASE("removing the sole element leaves it detached") {
        arena.list_append_tail(NodeHandle::null(), a);
        arena.list_remove(a);
        CHECK(arena.at(a).right == a);
    }

    SUBCASE("removing the anchor leaves the rest consistent; caller re-anchors") {
        NodeHandle anchor = arena.list_append_tail(NodeHandle::null(), a);
        anchor = arena.list_append_tail(anchor, b);
        arena.list_remove(a);
        CHECK(arena.at(b).right == b);
        CHECK(arena.at(b).left == b);
    }
}

TEST_CASE("compare_less counts exactly one comparison per call") {
    FibHeap h;
    NodeHandle a = h.insert(6);
    NodeHandle b = h.insert(10);
    std::uint64_t before = h.metrics().comparisons;
    CHECK(h.compare_less(a, b));
    CHECK(h.metrics().comparisons == before + 1);
    CHECK_FALSE(h.compare_less(b, a));
    CHECK(h.metrics().comparisons == before + 2);
}

TEST_CASE("duplicate keys order by insertion seq") {
    FibHeap h;
    NodeHandle first = h.insert(5);
    h.insert(7);
    NodeHandle second = h.insert(5);
    CHECK(h.compare_less(first, second));
    CHECK_FALSE(h.compare_less(second, first));
}

TEST_CASE("handles die with their nodes, even after slot recycling") {
    FibHeap h;
    NodeHandle a = h.insert(1);
    h.insert(2);
    REQUIRE(h.extract_min() == 1);
    CHECK_THROWS_AS(h.decrease_key(a, 0), ContractViolation);
    CHECK_THROWS_AS(h.delete_node(a), ContractViolation);
    // recycle a's slot; the stale handle must still be dead
    h.insert(3);
    CHECK_THROWS_AS(h.decrease_key(a, 0), ContractViolation);
}

TEST_CASE("decrease_key rejects key increases") {
    FibHeap h;
    NodeHandle a = h.insert(5);
    CHECK_THROWS_AS(h.decrease_key(a, 6), ContractViolation);
    h.decrease_key(a, 5);  // equal is allowed
    CHECK(h.find_min()->second == 5);
}

TEST_CASE("metrics reset only through snapshot_and_reset") {
    FibHeap h;
    h.insert(3);
    h.insert(1);
    h.extract_min();
    MetricsRecord snap = h.snapshot_and_reset_metrics();
    CHECK(snap.comparisons > 0);
    CHECK(h.metrics().comparisons == 0);
    CHECK(h.metrics().max_degree_seen == 0);
}

TEST_CASE("log-phi helpers") {
    CHECK(floor_log_phi(1) == 0);
    CHECK(floor_log_phi(2) == 1);   // phi^1 = 1.618 <= 2 < phi^2 = 2.618
    CHECK(floor_log_phi(3) == 2);
    CHECK(floor_log_phi(14) == 5);  // phi^5 = 11.09 <= 14 < phi^6 = 17.94
    CHECK(degree_cap(1) == 1);
    CHECK(slot_index_cap(1) == 2);
    CHECK(slot_index_cap(14) == 8);
}
