#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kegraph/graph.hpp"
#include "test_util.hpp"

using namespace kegraph;

TEST_CASE("empty graph is a legal value") {
    Graph g;
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(g == Graph::edgeless(0));
}

TEST_CASE("standard constructions") {
    CHECK(make(GraphKind::complete, 2).edge_count() == 1);
    CHECK(make(GraphKind::path, 4).edge_count() == 3);

    const Graph c4 = make(GraphKind::cycle, 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK(make(GraphKind::edgeless, 5).edge_count() == 0);
    CHECK(Graph::path(0) == Graph());
    CHECK(Graph::path(1) == Graph::edgeless(1));
    CHECK_THROWS_AS(make(GraphKind::cycle, 2), std::invalid_argument);
}

TEST_CASE("from_edges rejects loops and bad indices") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
    // duplicate edges collapse
    CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("disjoint union shifts the second operand") {
    CHECK(disjoint_union(Graph::complete(1), Graph::complete(1)) == Graph::edgeless(2));

    const Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
    CHECK(two_k2.vertex_count() == 4);
    CHECK(two_k2.edge_count() == 2);
    CHECK(two_k2.adjacent(2, 3));
    CHECK_FALSE(two_k2.adjacent(1, 2));

    const Graph family_member = disjoint_union(Graph::edgeless(1), two_k2);
    CHECK(family_member.vertex_count() == 5);
    CHECK(family_member.edge_count() == 2);
    CHECK(family_member.degree(0) == 0);
}

TEST_CASE("induced subgraphs relabel ascending") {
    CHECK(induced_subgraph(Graph::complete(3), {0, 1}) == Graph::complete(2));
    CHECK(induced_subgraph(Graph::path(4), {0, 2}) == Graph::edgeless(2));
    CHECK(induced_subgraph(Graph::cycle(4), {0, 1, 2}) == Graph::path(3));
    CHECK(induced_subgraph(Graph::complete(4), {}) == Graph());
    CHECK_THROWS_AS(induced_subgraph(Graph::path(2), {0, 5}), std::out_of_range);
}

TEST_CASE("neighbors and set neighborhood") {
    CHECK(Graph::path(4).neighbors(1) == VertexSet{0, 2});
    CHECK(neighborhood(Graph::complete(3), {0}) == VertexSet{1, 2});
    CHECK(neighborhood(Graph::cycle(4), {0, 2}) == VertexSet{1, 3});
    CHECK_THROWS_AS(Graph::path(4).neighbors(4), std::out_of_range);
    CHECK_THROWS_AS(neighborhood(Graph::path(2), {-1}), std::out_of_range);
}

TEST_CASE("set neighborhood matches its definition on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testutil::random_graph(8, 0.4, rng);
        VertexSet a;
        for (int v = 0; v < 8; ++v)
            if (rng() % 3 == 0) a.push_back(v);
        VertexSet expected;
        for (int v = 0; v < 8; ++v) {
            bool hit = false;
            for (int w : a)
                if (g.adjacent(v, w)) hit = true;
            if (hit) expected.push_back(v);
        }
        CHECK(neighborhood(g, a) == expected);
    }
}

TEST_CASE("apex join") {
    CHECK(apex_join(Graph()) == Graph::complete(1));
    CHECK(apex_join(Graph::complete(2)) == Graph::complete(3));

    const Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
    const Graph apexed = apex_join(two_k2);
    CHECK(apexed.vertex_count() == 5);
    CHECK(apexed.edge_count() == 6);
    CHECK(apexed.degree(4) == 4);
}

TEST_CASE("constructions stay symmetric and loopless") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(n, 0.5, rng);
        if (trial % 3 == 1) g = apex_join(g);
        if (trial % 3 == 2) {
            VertexSet keep;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng() % 2) keep.push_back(v);
            g = induced_subgraph(g, keep);
        }
        int pairs = 0;
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                if (g.adjacent(u, v)) ++pairs;
            }
        }
        CHECK(pairs == g.edge_count());
    }
}

TEST_CASE("remove_edge and remove_vertex") {
    const Graph p3 = Graph::path(3);
    CHECK(remove_edge(p3, 1, 2) == Graph::from_edges(3, {{0, 1}}));
    CHECK_THROWS_AS(remove_edge(p3, 0, 2), std::invalid_argument);
    CHECK(remove_vertex(Graph::complete(3), 1) == Graph::complete(2));
    CHECK(remove_vertex(Graph::complete(1), 0) == Graph());
}

TEST_CASE("permutation preserves degrees") {
    std::mt19937_64 rng(3);
    const Graph g = testutil::random_graph(7, 0.5, rng);
    const auto perm = testutil::random_permutation(7, rng);
    const Graph h = permuted(g, perm);
    CHECK(h.edge_count() == g.edge_count());
    for (int i = 0; i < 7; ++i) CHECK(h.degree(i) == g.degree(perm[i]));
}

TEST_CASE("connectivity and bipartiteness") {
    CHECK(is_connected(Graph()));
    CHECK(is_connected(Graph::complete(1)));
    CHECK(is_connected(Graph::path(4)));
    CHECK_FALSE(is_connected(Graph::edgeless(2)));
    CHECK_FALSE(is_connected(disjoint_union(Graph::complete(2), Graph::complete(2))));

    CHECK(is_bipartite(Graph()));
    CHECK(is_bipartite(Graph::path(4)));
    CHECK(is_bipartite(Graph::cycle(4)));
    CHECK(is_bipartite(Graph::edgeless(5)));
    CHECK_FALSE(is_bipartite(Graph::cycle(5)));
    CHECK_FALSE(is_bipartite(Graph::complete(3)));
}
