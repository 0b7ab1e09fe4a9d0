#include <doctest.h>

#include <random>
#include <set>

#include "kegraph/enumerate.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"
#include "test_util.hpp"

using namespace kegraph;

TEST_CASE("canonical form is a labeling-invariant key") {
    const Graph p3_a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const Graph p3_b = Graph::from_edges(3, {{1, 0}, {0, 2}});  // center relabeled
    CHECK(canonical_form(p3_a) == canonical_form(p3_b));
    CHECK(canonical_form(Graph::complete(3)) != canonical_form(p3_a));
}

TEST_CASE("canonical form is invariant under random permutations") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng() % 7);
        const Graph g = testutil::random_graph(n, 0.5, rng);
        const Graph h = permuted(g, testutil::random_permutation(n, rng));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("labeled enumeration counts") {
    CHECK(enumerate_graphs(2, false).size() == 2);
    CHECK(enumerate_graphs(0, false).size() == 1);
    for (int n = 0; n <= 5; ++n) {
        const std::size_t expected = std::size_t{1} << (n * (n - 1) / 2);
        CHECK(enumerate_labeled(n).size() == expected);
    }
}

TEST_CASE("four-vertex graphs fall into exactly 11 isomorphism classes") {
    std::set<std::string> keys;
    for (const Graph& g : enumerate_labeled(4)) keys.insert(canonical_form(g));
    CHECK(keys.size() == 11);
}

TEST_CASE("dedup enumeration matches canonical-key counting") {
    for (int n = 0; n <= 5; ++n) {
        std::set<std::string> keys;
        for (const Graph& g : enumerate_labeled(n)) keys.insert(canonical_form(g));
        const auto reps = enumerate_nonisomorphic(n);
        CHECK(reps.size() == keys.size());
        // every representative is in canonical labeling and sorted by key
        std::string last;
        for (const Graph& g : reps) {
            const std::string key = canonical_form(g);
            CHECK(keys.count(key) == 1);
            CHECK(last < key);
            last = key;
        }
    }
    CHECK(enumerate_graphs(3, true).size() == 4);
    CHECK(enumerate_graphs(4, true).size() == 11);
    CHECK(enumerate_graphs(5, true).size() == 34);
}

TEST_CASE("size bounds are enforced") {
    CHECK_THROWS_AS(canonical_form(Graph::edgeless(9)), BoundError);
    CHECK_THROWS_AS(enumerate_labeled(7), BoundError);
    CHECK_THROWS_AS(enumerate_nonisomorphic(8), BoundError);
    CHECK_THROWS_AS(enumerate_labeled(-1), BoundError);
}
