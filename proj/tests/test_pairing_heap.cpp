#include <doctest.h>

#include <algorithm>
#include <span>

#include "heaps/pairing_heap.hpp"
#include "test_util.hpp"

using namespace heaps;
using heaps::test::kExampleSeq;

namespace {

std::vector<Key> snapshot_keys(const RootSnapshot& snap) {
    std::vector<Key> out;
    for (const auto& [h, tk] : snap) out.push_back(tk.key);
    return out;
}

}  // namespace

TEST_CASE("pairing heap exposes the same top-level operations") {
    PairingHeap h;
    SUBCASE("insert into empty") {
        h.insert(5);
        CHECK(h.find_min()->second == 5);
        CHECK(h.size() == 1);
    }
    SUBCASE("singleton extract empties") {
        h.insert(7);
        CHECK(h.extract_min() == 7);
        CHECK(h.empty());
    }
    SUBCASE("union of singletons keeps both roots until a consolidate") {
        PairingHeap a, b;
        a.insert(5);
        b.insert(3);
        a.merge_from(b);
        CHECK(a.size() == 2);
        CHECK(a.root_list().size() == 2);
        CHECK(a.find_min()->second == 3);
        CHECK(a.validate().ok);
    }
}

TEST_CASE("consolidate walk on small root lists") {
    PairingHeap h;
    h.set_cycle_logging(true);
    SUBCASE("single root: the loop body never runs") {
        h.insert(0);
        h.insert(9);
        CHECK(h.extract_min() == 0);
        CHECK(h.find_min()->second == 9);
        CHECK(h.root_handle() == h.min_handle());
        CHECK(h.last_consolidate_log().cycles == 0);
    }
    SUBCASE("[1,2]: 2 links under 1") {
        heaps::test::insert_all(h, std::array<Key, 3>{0, 1, 2});
        h.extract_min();
        CHECK(structure_string(h) == "1[2]");
        CHECK(h.root_handle() == h.min_handle());
    }
    SUBCASE("descending [5,4,3] chains 3->4->5") {
        heaps::test::insert_all(h, std::array<Key, 4>{0, 5, 4, 3});
        h.extract_min();
        CHECK(structure_string(h) == "3[4[5]]");
    }
    SUBCASE("ascending [1,2,3,4] chains 1->2->3->4") {
        heaps::test::insert_all(h, std::array<Key, 5>{0, 1, 2, 3, 4});
        h.extract_min();
        CHECK(structure_string(h) == "1[2[3[4]]]");
    }
    SUBCASE("after every consolidate there is exactly one root equal to min") {
        heaps::test::insert_all(h, std::array<Key, 8>{0, 42, 17, 99, 3, 58, 3, 76});
        while (auto k = h.extract_min()) {
            if (!h.empty()) {
                CHECK(h.root_list().size() == 1);
                CHECK(h.root_handle() == h.min_handle());
            }
            CHECK(h.validate().ok);
        }
    }
}

// Frozen hand trace of the cyclic consolidation over the example sequence:
// cycle lists shrink from 13 roots -> [11,6,8,3,2] -> [6,2] -> [2], and the
// final tree hangs 11, 3, 6 under 2 in that link order.
TEST_CASE("example sequence: cyclic consolidation trace") {
    PairingHeap h;
    h.set_cycle_logging(true);
    heaps::test::insert_all(h, kExampleSeq);
    REQUIRE(h.extract_min() == 1);

    CHECK(structure_string(h) == "2[11[13] 3[4[5[9[12]]] 7] 6[10 8[14]]]");
    CHECK(h.find_min()->second == 2);
    CHECK(h.root_handle() == h.min_handle());
    CHECK(h.root_list().size() == 1);
    CHECK(h.size() == 13);
    CHECK(h.validate().ok);

    const ConsolidateLog& log = h.last_consolidate_log();
    CHECK(log.roots_before == 13);
    CHECK(log.cycles == 2);
    REQUIRE(log.snapshots.size() == 4);
    CHECK(snapshot_keys(log.snapshots[0]) ==
          std::vector<Key>{11, 13, 6, 10, 8, 14, 12, 9, 5, 4, 3, 7, 2});
    CHECK(snapshot_keys(log.snapshots[1]) == std::vector<Key>{11, 6, 8, 3, 2});
    CHECK(snapshot_keys(log.snapshots[2]) == std::vector<Key>{6, 2});
    CHECK(snapshot_keys(log.snapshots[3]) == std::vector<Key>{2});

    CHECK(log.max_degree_increase == 3);  // node 2 gains 11, 3 and 6
    for (std::size_t i = 0; i + 1 < log.snapshots.size(); ++i) {
        CHECK(validate_pairing_cycle(log.snapshots[i], log.snapshots[i + 1]).ok);
    }
    CHECK(validate_degree_growth(log.roots_before, log.degree_increases).ok);
}

TEST_CASE("cascading cut on the example structure") {
    PairingHeap h;
    auto handles = heaps::test::insert_all(h, kExampleSeq);
    REQUIRE(h.extract_min() == 1);

    NodeHandle n7 = handles[12], n4 = handles[10], n3 = handles[11];
    h.decrease_key(n7, 1);  // cut 7 from 3; 3 (child of 2) becomes marked
    CHECK(h.arena().at(n3).mark);
    CHECK(h.metrics().cuts == 1);

    h.decrease_key(n4, 0);  // cut 4; marked 3 cascades out as well
    CHECK(h.metrics().cuts == 3);
    CHECK(h.metrics().cascading_cuts == 1);
    CHECK_FALSE(h.arena().at(n3).mark);
    CHECK(structure_string(h) == "2[11[13] 6[10 8[14]]] 1 0[5[9[12]]] 3");
    CHECK(h.find_min()->second == 0);
    CHECK(h.validate().ok);

    std::vector<Key> expect = {0, 1, 2, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14};
    CHECK(heaps::test::extract_all(h) == expect);
}

TEST_CASE("local-minimum survival validator on explicit snapshots") {
    auto snap = [](std::initializer_list<Key> keys) {
        RootSnapshot s;
        std::uint32_t i = 0;
        for (Key k : keys) {
            s.emplace_back(NodeHandle{i, 0}, TotalKey{false, k, i});
            ++i;
        }
        return s;
    };
    SUBCASE("local minima of [11,6,8,3,2] are {6,2} and must survive") {
        RootSnapshot before = snap({11, 6, 8, 3, 2});
        RootSnapshot after;
        after.emplace_back(before[1]);  // 6
        after.emplace_back(before[4]);  // 2
        CHECK(validate_pairing_cycle(before, after).ok);
        RootSnapshot missing_six;
        missing_six.emplace_back(before[4]);
        ValidationReport rep = validate_pairing_cycle(before, missing_six);
        CHECK_FALSE(rep.ok);
        CHECK(rep.first_violation.find("key=6") != std::string::npos);
    }
    SUBCASE("singleton list passes vacuously") {
        CHECK(validate_pairing_cycle(snap({1}), RootSnapshot{}).ok);
    }
    SUBCASE("[2,1]: the sole local minimum 1 must survive") {
        RootSnapshot before = snap({2, 1});
        RootSnapshot keeps_one;
        keeps_one.emplace_back(before[1]);
        CHECK(validate_pairing_cycle(before, keeps_one).ok);
        RootSnapshot keeps_two;
        keeps_two.emplace_back(before[0]);
        CHECK_FALSE(validate_pairing_cycle(before, keeps_two).ok);
    }
}

TEST_CASE("degree-growth validator") {
    CHECK(validate_degree_growth(1, {5}).ok);  // vacuous
    CHECK(validate_degree_growth(13, {3, 2, 1, 0}).ok);  // 3 < 2*lg(13) ~ 7.4
    ValidationReport rep = validate_degree_growth(4, {4});  // 4 is not < 2*lg(4) = 4
    CHECK_FALSE(rep.ok);
    CHECK(validate_degree_growth(8, {1}).ok);  // 1 < 6
}

TEST_CASE("large consolidations stay within the iteration budget and the bounds") {
    PairingHeap h;
    h.set_cycle_logging(true);
    std::uint64_t s = 987654321;
    std::vector<Key> keys;
    for (int i = 0; i < 4097; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        keys.push_back(static_cast<Key>((s >> 40)));
    }
    heaps::test::insert_all(h, std::span<const Key>(keys));
    REQUIRE(h.extract_min().has_value());  // consolidates 4096 roots
    const ConsolidateLog& log = h.last_consolidate_log();
    CHECK(log.roots_before == 4096);
    for (std::size_t i = 0; i + 1 < log.snapshots.size(); ++i) {
        CHECK(validate_pairing_cycle(log.snapshots[i], log.snapshots[i + 1]).ok);
    }
    CHECK(validate_degree_growth(log.roots_before, log.degree_increases).ok);
    CHECK(h.validate().ok);
}
