#ifndef KEGRAPH_CLASSIFY_HPP
#define KEGRAPH_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kegraph/corona.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

/// Koenig deficiency n - alpha - mu via direct exact solvers on g itself.
/// Exponential in the worst case; the corona classifiers below avoid it.
int kappa_direct(const Graph& g, int max_vertices = kDirectAlphaMaxVertices);

bool is_k_koenig_egervary(const Graph& g, int k, int max_vertices = kDirectAlphaMaxVertices);

struct TheoremVerdict {
    bool holds = false;
    std::string case_tag;  // "(i)".."(iii)" on the 1-KE route, else empty
    std::string witness;   // first failure (ascending index), empty when holds

    explicit operator bool() const { return holds; }
};

/// When every satellite is nonempty: the corona is Koenig-Egervary iff
/// every satellite is Koenig-Egervary and has no perfect matching. Empty
/// satellites leave bare head vertices, which fold into a head-local
/// slack term (see classify.cpp); either way the verdict matches the
/// direct kappa and never builds the corona.
TheoremVerdict corona_ke_verdict(const CoronaSpec& spec);

/// When every satellite is nonempty: the corona is 1-Koenig-Egervary iff
/// H[F] is K0 with exactly one 1-KE satellite (rest KE), or H[F] is K1 or
/// K2 with all satellites KE. |F|=2 with nonadjacent head vertices is
/// 2K1, not K2, and fails. Shapes reachable only through empty satellites
/// get case_tag "(degenerate)".
TheoremVerdict corona_1ke_verdict(const CoronaSpec& spec);

/// KE corona with a perfect matching. Equivalent, when every satellite is
/// nonempty, to: each satellite KE with an almost perfect matching.
bool corona_ke_with_perfect_matching(const CoronaSpec& spec);

/// Unique-perfect-matching variant: every satellite KE with a unique
/// almost perfect matching.
bool corona_ke_with_unique_perfect_matching(const CoronaSpec& spec);

/// Uniform corona H o X. 1-KE iff H = K1 and X is 1-KE without a perfect
/// matching or KE with one, or H = K2 and X is KE with a perfect matching.
/// Never 1-KE for n(H) >= 3.
bool uniform_corona_is_1ke(const Graph& head, const Graph& x);

enum class CliqueCoronaClass { KE, OneKE, Other };

/// H o K_q: KE iff q = 1; 1-KE iff (H,q) is K1 with q in {2,3} or K2 with
/// q = 2; anything else is neither. Cross-validated against kappa in
/// tests (K1 o K4 = K5 has deficiency 2).
CliqueCoronaClass clique_corona_class(const Graph& head, int clique_size);
std::string to_string(CliqueCoronaClass c);

/// mu(g) >= n(g) - 1. Together with mu <= n/2 this pins g down to K0, K1
/// or K2; the equivalence is checked exhaustively in tests.
bool matching_number_at_least_order_minus_one(const Graph& g);

enum class Method { KeTheorem, OneKeTheorem, FastFormula, Direct };
std::string method_name(Method m);

struct ComponentFacts {
    int index = 0;  // 0-based family position
    int n = 0;
    int alpha = 0;
    int mu = 0;
    bool has_pm = false;
    bool is_ke = false;
    bool is_1ke = false;
};

struct ClassificationReport {
    int kappa = 0;
    Method method = Method::Direct;
    std::string case_tag;
    std::string witness;
    std::vector<ComponentFacts> components;
    std::optional<Matching> matching_certificate;
    std::optional<VertexSet> independent_set_certificate;

    std::string ke_class() const;  // "KE", "1-KE", "2-KE", ...
};

std::string ke_class_name(int kappa);

/// Theorem route: KE check, then 1-KE check, then kappa by the fast
/// formulas. Every path solves the small components only.
ClassificationReport classify_corona(const CoronaSpec& spec);

/// Direct route on an arbitrary graph, with certificates.
ClassificationReport classify_direct(const Graph& g,
                                     int max_vertices = kDirectAlphaMaxVertices);

}  // namespace kegraph

#endif
