#include <doctest.h>

#include <random>

#include "kegraph/classify.hpp"
#include "kegraph/enumerate.hpp"
#include "kegraph/graph6.hpp"
#include "kegraph/harness.hpp"
#include "test_util.hpp"

using namespace kegraph;

namespace {

Graph q_k1_p_k2(int q, int p) {
    Graph g = Graph::edgeless(q);
    for (int i = 0; i < p; ++i) g = disjoint_union(g, Graph::complete(2));
    return g;
}

template <typename Fn>
void for_each_spec(int max_head, const std::vector<Graph>& catalog, Fn&& fn) {
    for (int hn = 0; hn <= max_head; ++hn)
        for (const Graph& head : enumerate_nonisomorphic(hn)) {
            std::vector<std::size_t> pick(hn, 0);
            while (true) {
                CoronaSpec spec;
                spec.head = head;
                for (int i = 0; i < hn; ++i) spec.family.push_back(catalog[pick[i]]);
                fn(spec);
                int pos = hn - 1;
                while (pos >= 0 && ++pick[pos] == catalog.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
}

}  // namespace

TEST_CASE("direct deficiency") {
    CHECK(kappa_direct(Graph::complete(2)) == 0);
    CHECK(kappa_direct(Graph::complete(3)) == 1);
    CHECK(kappa_direct(Graph::complete(7)) == 3);
    CHECK(kappa_direct(Graph()) == 0);
}

TEST_CASE("k-class predicate") {
    CHECK(is_k_koenig_egervary(Graph::cycle(4), 0));
    CHECK(is_k_koenig_egervary(Graph::complete(4), 1));
    const CoronaSpec spec{Graph::complete(1),
                          {disjoint_union(Graph::complete(2), Graph::complete(2))}};
    CHECK(is_k_koenig_egervary(build_corona(spec).graph, 1));
}

TEST_CASE("KE corona characterization on the worked examples") {
    const TheoremVerdict c4_case =
        corona_ke_verdict({Graph::path(2), {Graph::cycle(4), Graph::complete(1)}});
    CHECK_FALSE(c4_case.holds);
    CHECK(c4_case.witness == "X1 has a perfect matching");

    CHECK(corona_ke_verdict({Graph::complete(1), {q_k1_p_k2(1, 1)}}).holds);

    const TheoremVerdict k3_case = corona_ke_verdict(
        {Graph::path(3), {Graph::complete(3), Graph::complete(1), Graph::complete(1)}});
    CHECK_FALSE(k3_case.holds);
    CHECK(k3_case.witness == "X1 is not a Konig-Egervary graph (kappa=1)");
}

TEST_CASE("1-KE corona characterization on the worked examples") {
    const TheoremVerdict case_i = corona_1ke_verdict(
        {Graph::path(3), {Graph::complete(3), Graph::complete(1), Graph::complete(1)}});
    CHECK(case_i.holds);
    CHECK(case_i.case_tag == "(i)");

    const TheoremVerdict k4_case =
        corona_1ke_verdict({Graph::complete(2), {Graph::complete(4), Graph::complete(2)}});
    CHECK_FALSE(k4_case.holds);
    CHECK(k4_case.witness ==
          "H[F]=K2 while X1 is 1-Konig-Egervary, not Konig-Egervary");

    const TheoremVerdict two_k1_case = corona_1ke_verdict(
        {Graph::path(4),
         {Graph::complete(2), Graph::complete(1), Graph::complete(2), Graph::complete(1)}});
    CHECK_FALSE(two_k1_case.holds);
    CHECK(two_k1_case.witness == "H[F]=2K1");

    const TheoremVerdict case_ii =
        corona_1ke_verdict({Graph::complete(1), {Graph::cycle(4)}});
    CHECK(case_ii.holds);
    CHECK(case_ii.case_tag == "(ii)");

    const TheoremVerdict case_iii =
        corona_1ke_verdict(uniform_spec(Graph::complete(2), Graph::complete(2)));
    CHECK(case_iii.holds);
    CHECK(case_iii.case_tag == "(iii)");
}

TEST_CASE("characterizations match direct kappa across a corpus") {
    for_each_spec(2, default_catalog(), [](const CoronaSpec& spec) {
        const int kappa = kappa_direct(build_corona(spec).graph);
        CHECK(corona_ke_verdict(spec).holds == (kappa == 0));
        CHECK(corona_1ke_verdict(spec).holds == (kappa == 1));
        CHECK(fast_kappa(spec) == kappa);
    });
}

TEST_CASE("empty satellites fold into the head") {
    CHECK(corona_ke_verdict({Graph::complete(1), {Graph()}}).holds);
    CHECK(fast_kappa(CoronaSpec{Graph::complete(1), {Graph()}}) == 0);

    CHECK(corona_ke_verdict({Graph::complete(2), {Graph(), Graph::complete(2)}}).holds);

    const TheoremVerdict degenerate =
        corona_1ke_verdict({Graph::edgeless(2), {Graph(), Graph::complete(2)}});
    CHECK(degenerate.holds);
    CHECK(degenerate.case_tag == "(degenerate)");

    const TheoremVerdict p3_mixed =
        corona_1ke_verdict({Graph::path(3), {Graph(), Graph(), Graph::complete(2)}});
    CHECK(p3_mixed.holds);

    const TheoremVerdict bare_triangle =
        corona_ke_verdict(uniform_spec(Graph::complete(3), Graph()));
    CHECK_FALSE(bare_triangle.holds);  // corona is K3 itself
    CHECK(bare_triangle.witness ==
          "bare head vertices (empty satellites) induce H[F0] with kappa=1");
}

TEST_CASE("perfect matching corollary") {
    CHECK(corona_ke_with_perfect_matching(uniform_spec(Graph::path(3), Graph::complete(1))));
    const CoronaGraph pendant = build_corona(uniform_spec(Graph::path(3), Graph::complete(1)));
    CHECK(has_perfect_matching(pendant.graph));

    CHECK_FALSE(corona_ke_with_perfect_matching(
        {Graph::path(2), {Graph::cycle(4), Graph::complete(1)}}));

    // literal per-satellite condition, valid once satellites are nonempty
    std::vector<Graph> nonempty_catalog = default_catalog();
    nonempty_catalog.erase(nonempty_catalog.begin());
    for_each_spec(2, nonempty_catalog, [](const CoronaSpec& spec) {
        bool literal = true;
        for (const Graph& x : spec.family)
            if (kappa_direct(x) != 0 || !has_almost_perfect_matching(x)) literal = false;
        CHECK(corona_ke_with_perfect_matching(spec) == literal);

        const CoronaGraph built = build_corona(spec);
        const bool truth =
            kappa_direct(built.graph) == 0 && has_perfect_matching(built.graph);
        CHECK(corona_ke_with_perfect_matching(spec) == truth);
    });

    // with empty satellites only the built-graph truth is the contract
    for_each_spec(2, default_catalog(), [](const CoronaSpec& spec) {
        const CoronaGraph built = build_corona(spec);
        const bool truth =
            kappa_direct(built.graph) == 0 && has_perfect_matching(built.graph);
        CHECK(corona_ke_with_perfect_matching(spec) == truth);
    });
}

TEST_CASE("unique perfect matching corollary") {
    const Graph k2_plus_k1 = disjoint_union(Graph::complete(2), Graph::complete(1));
    const CoronaSpec spec = uniform_spec(Graph::complete(2), k2_plus_k1);
    CHECK(corona_ke_with_unique_perfect_matching(spec));
    CHECK(has_unique_perfect_matching(build_corona(spec).graph));

    // P3 is KE with two almost perfect matchings, so uniqueness fails
    CHECK_FALSE(corona_ke_with_unique_perfect_matching(
        uniform_spec(Graph::complete(2), Graph::path(3))));

    std::vector<Graph> nonempty_catalog = default_catalog();
    nonempty_catalog.erase(nonempty_catalog.begin());
    for_each_spec(2, nonempty_catalog, [](const CoronaSpec& spec) {
        const CoronaGraph built = build_corona(spec);
        const bool truth =
            kappa_direct(built.graph) == 0 && has_unique_perfect_matching(built.graph);
        CHECK(corona_ke_with_unique_perfect_matching(spec) == truth);
    });
}

TEST_CASE("uniform coronas") {
    CHECK(uniform_corona_is_1ke(Graph::complete(1), Graph::complete(3)));
    CHECK(uniform_corona_is_1ke(Graph::complete(2), Graph::complete(2)));
    CHECK_FALSE(uniform_corona_is_1ke(Graph::path(4), Graph::complete(2)));
    CHECK_FALSE(uniform_corona_is_1ke(Graph::edgeless(2), Graph::complete(2)));

    for (int hn = 1; hn <= 3; ++hn)
        for (const Graph& head : enumerate_nonisomorphic(hn))
            for (const Graph& x : default_catalog())
                CHECK(uniform_corona_is_1ke(head, x) ==
                      (fast_kappa(uniform_spec(head, x)) == 1));
}

TEST_CASE("clique corona table") {
    CHECK(clique_corona_class(Graph::path(5), 1) == CliqueCoronaClass::KE);
    CHECK(clique_corona_class(Graph::complete(1), 2) == CliqueCoronaClass::OneKE);
    CHECK(clique_corona_class(Graph::complete(1), 3) == CliqueCoronaClass::OneKE);
    CHECK(clique_corona_class(Graph::complete(1), 5) == CliqueCoronaClass::Other);
    CHECK(clique_corona_class(Graph::complete(2), 2) == CliqueCoronaClass::OneKE);
    CHECK(clique_corona_class(Graph::edgeless(2), 2) == CliqueCoronaClass::Other);

    // K1 o K4 is K5, which already has deficiency 2
    CHECK(clique_corona_class(Graph::complete(1), 4) == CliqueCoronaClass::Other);
    CHECK(fast_kappa(clique_spec(Graph::complete(1), 4)) == 2);

    for (int hn = 1; hn <= 3; ++hn)
        for (const Graph& head : enumerate_nonisomorphic(hn))
            for (int q = 1; q <= 5; ++q) {
                const int kappa = fast_kappa(clique_spec(head, q));
                const CliqueCoronaClass expected = kappa == 0   ? CliqueCoronaClass::KE
                                                   : kappa == 1 ? CliqueCoronaClass::OneKE
                                                                : CliqueCoronaClass::Other;
                CHECK(clique_corona_class(head, q) == expected);
            }
}

TEST_CASE("mu at least n-1 singles out the three smallest graphs") {
    CHECK(matching_number_at_least_order_minus_one(Graph()));
    CHECK(matching_number_at_least_order_minus_one(Graph::complete(1)));
    CHECK(matching_number_at_least_order_minus_one(Graph::complete(2)));
    CHECK_FALSE(matching_number_at_least_order_minus_one(Graph::edgeless(2)));

    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_nonisomorphic(n)) {
            const bool tiny = n == 0 || n == 1 || (n == 2 && g.edge_count() == 1);
            CHECK(matching_number_at_least_order_minus_one(g) == tiny);
        }
}

TEST_CASE("corona classification dispatch") {
    const ClassificationReport ke =
        classify_corona({Graph::complete(1), {q_k1_p_k2(2, 2)}});
    CHECK(ke.kappa == 0);
    CHECK(ke.method == Method::KeTheorem);
    CHECK(ke.ke_class() == "KE");

    const ClassificationReport one_ke = classify_corona(
        {Graph::path(3), {Graph::complete(3), Graph::complete(1), Graph::complete(1)}});
    CHECK(one_ke.kappa == 1);
    CHECK(one_ke.method == Method::OneKeTheorem);
    CHECK(one_ke.case_tag == "(i)");
    CHECK(one_ke.ke_class() == "1-KE");

    const ClassificationReport two_ke =
        classify_corona(uniform_spec(Graph::path(4), Graph::complete(2)));
    CHECK(two_ke.kappa == 2);
    CHECK(two_ke.method == Method::FastFormula);
    CHECK(two_ke.ke_class() == "2-KE");
    CHECK_FALSE(two_ke.witness.empty());
    CHECK(two_ke.components.size() == 4);
    CHECK(two_ke.components[0].has_pm);

    CHECK(method_name(Method::KeTheorem) == "ke-theorem");
    CHECK(method_name(Method::OneKeTheorem) == "1ke-theorem");
    CHECK(method_name(Method::FastFormula) == "fast-formula");
    CHECK(method_name(Method::Direct) == "direct");
}

TEST_CASE("direct classification carries certificates") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testutil::random_graph(9, 0.4, rng);
        const ClassificationReport report = classify_direct(g);
        REQUIRE(report.matching_certificate.has_value());
        REQUIRE(report.independent_set_certificate.has_value());
        CHECK(is_valid_matching(g, *report.matching_certificate));
        CHECK(is_independent_set(g, *report.independent_set_certificate));
        const int kappa = g.vertex_count() -
                          static_cast<int>(report.independent_set_certificate->size()) -
                          report.matching_certificate->size();
        CHECK(report.kappa == kappa);
        CHECK(report.kappa >= 0);
        CHECK(report.kappa <= report.matching_certificate->size());
    }
}

TEST_CASE("triangle head with a pendant vertex") {
    const Graph head = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const CoronaSpec spec{head,
                          {Graph::complete(3), Graph::complete(2), Graph::complete(3),
                           Graph::edgeless(2)}};
    CHECK_FALSE(corona_ke_verdict(spec).holds);
    // first failure by ascending index: the K3 satellite is not KE
    CHECK(corona_ke_verdict(spec).witness == "X1 is not a Konig-Egervary graph (kappa=1)");
    CHECK(fast_kappa(spec) == 3);
    CHECK(kappa_direct(build_corona(spec).graph) == 3);
}
