#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "heaps/presortedness.hpp"
#include "heaps/workload.hpp"
#include "test_util.hpp"

using namespace heaps;
using heaps::test::kExampleSeq;

namespace {

// independent O(n^2) oracle for the fast inversion count
std::uint64_t inversions_brute(std::span<const Key> x) {
    std::uint64_t inv = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] > x[j]) ++inv;
        }
    }
    return inv;
}

std::vector<Key> example_vec() { return {kExampleSeq.begin(), kExampleSeq.end()}; }

}  // namespace

TEST_CASE("runs counts maximal non-decreasing segments") {
    CHECK(runs_count(std::vector<Key>{1, 2, 3}) == 1);
    CHECK(runs_count(std::vector<Key>{3, 2, 1}) == 3);
    CHECK(runs_count(std::vector<Key>{7}) == 1);
    CHECK(runs_count(std::vector<Key>{2, 2, 1}) == 2);  // ties extend a run
    CHECK(runs_count(example_vec()) == 9);
    CHECK_THROWS_AS(runs_count(std::vector<Key>{}), ContractViolation);
}

TEST_CASE("inversions matches the quadratic oracle") {
    CHECK(inversions(std::vector<Key>{1, 2, 3}) == 0);
    CHECK(inversions(std::vector<Key>{2, 1}) == 1);
    CHECK(inversions(example_vec()) == 64);
    CHECK(inversions_brute(example_vec()) == 64);

    SUBCASE("exhaustive over all permutations of n <= 6") {
        for (std::size_t n = 1; n <= 6; ++n) {
            std::vector<Key> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                REQUIRE(inversions(perm) == inversions_brute(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    SUBCASE("random sequences with duplicates") {
        Rng rng(2024);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Key> xs(1 + rng.bounded(256));
            for (Key& k : xs) k = rng.range(-40, 40);
            REQUIRE(inversions(xs) == inversions_brute(xs));
        }
    }
}

TEST_CASE("local-minima depth chain") {
    SUBCASE("singleton is already depth 0") {
        LocalMinDepth d = local_min_depth(std::vector<Key>{5});
        CHECK(d.k == 0);
        REQUIRE(d.chain.size() == 1);
        CHECK(d.chain[0] == std::vector<Key>{5});
    }
    SUBCASE("sorted ascending collapses in one level") {
        std::vector<Key> xs(16);
        std::iota(xs.begin(), xs.end(), 1);
        LocalMinDepth d = local_min_depth(xs);
        CHECK(d.k == 1);
        CHECK(d.chain[1] == std::vector<Key>{1});
    }
    SUBCASE("the example sequence needs three levels") {
        LocalMinDepth d = local_min_depth(example_vec());
        CHECK(d.k == 3);
        REQUIRE(d.chain.size() == 4);
        CHECK(d.chain[1] == std::vector<Key>{11, 6, 1, 3, 2});
        CHECK(d.chain[2] == std::vector<Key>{1, 2});
        CHECK(d.chain[3] == std::vector<Key>{1});
    }
    SUBCASE("ties break by position") {
        LocalMinDepth d = local_min_depth(std::vector<Key>{7, 7, 7});
        CHECK(d.k == 1);
        CHECK(d.chain[1] == std::vector<Key>{7});
    }
}

TEST_CASE("presortedness properties on seeded inputs") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Key> xs(2 + rng.bounded(500));
        for (Key& k : xs) k = rng.range(-1000, 1000);

        // a new run starts only at an inversion between neighbors
        CHECK(runs_count(xs) - 1 <= inversions(xs));

        LocalMinDepth d = local_min_depth(xs);
        for (std::size_t i = 0; i + 1 < d.chain.size(); ++i) {
            std::size_t len = d.chain[i].size();
            std::size_t next = d.chain[i + 1].size();
            CHECK(next <= (len + 1) / 2 + 1);
            if (len > 1) CHECK(next < len);
            CHECK(next >= 1);
        }
        CHECK(d.chain.back().size() == 1);
    }
}
