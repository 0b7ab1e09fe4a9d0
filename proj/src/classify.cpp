#include "kegraph/classify.hpp"

#include <algorithm>

namespace kegraph {

namespace {

std::string x_label(int index) { return "X" + std::to_string(index + 1); }

ComponentFacts component_facts(int index, const Graph& x) {
    ComponentFacts f;
    f.index = index;
    f.n = x.vertex_count();
    f.alpha = independence_number(x);
    f.mu = matching_number(x);
    f.has_pm = 2 * f.mu == f.n;
    const int kappa = f.n - f.alpha - f.mu;
    f.is_ke = kappa == 0;
    f.is_1ke = kappa == 1;
    return f;
}

std::vector<ComponentFacts> all_component_facts(const CoronaSpec& spec) {
    std::vector<ComponentFacts> facts;
    facts.reserve(spec.family.size());
    for (std::size_t i = 0; i < spec.family.size(); ++i)
        facts.push_back(component_facts(static_cast<int>(i), spec.family[i]));
    return facts;
}

// kappa of the corona splits as sum kappa(X_i) + slack, where
// slack = |F| - alpha(H[F0]) - mu(H[F]), F = perfect-matching positions
// and F0 = empty positions. With every satellite nonempty, slack is
// |F| - mu(H[F]): zero iff F is empty, one iff H[F] is K1 or K2 -- the
// corona characterizations in their original shape.
struct HeadSlack {
    std::vector<int> f;      // positions whose satellite has a perfect matching
    std::vector<int> bare;   // positions with an empty satellite (subset of f)
    int slack = 0;
};

HeadSlack head_slack(const CoronaSpec& spec, const std::vector<ComponentFacts>& facts) {
    HeadSlack hs;
    for (const ComponentFacts& f : facts) {
        if (f.has_pm) hs.f.push_back(f.index);
        if (f.n == 0) hs.bare.push_back(f.index);
    }
    int held = matching_number(induced_subgraph(spec.head, hs.f));
    if (!hs.bare.empty())
        held += independence_number(induced_subgraph(spec.head, hs.bare));
    hs.slack = static_cast<int>(hs.f.size()) - held;
    return hs;
}

std::string hf_shape(const CoronaSpec& spec, const std::vector<int>& f) {
    if (f.empty()) return "K0";
    if (f.size() == 1) return "K1";
    if (f.size() == 2) return spec.head.adjacent(f[0], f[1]) ? "K2" : "2K1";
    return "|F|=" + std::to_string(f.size());
}

TheoremVerdict ke_verdict_from_facts(const CoronaSpec& spec,
                                     const std::vector<ComponentFacts>& facts) {
    for (const ComponentFacts& f : facts)
        if (!f.is_ke)
            return {false, "", x_label(f.index) + " is not a Konig-Egervary graph (kappa=" +
                                   std::to_string(f.n - f.alpha - f.mu) + ")"};
    const HeadSlack hs = head_slack(spec, facts);
    if (hs.slack == 0) return {true, "", ""};
    for (const ComponentFacts& f : facts)
        if (f.has_pm && f.n > 0)
            return {false, "", x_label(f.index) + " has a perfect matching"};
    return {false, "", "bare head vertices (empty satellites) induce H[F0] with kappa=" +
                           std::to_string(hs.slack)};
}

TheoremVerdict one_ke_verdict_from_facts(const CoronaSpec& spec,
                                         const std::vector<ComponentFacts>& facts) {
    int one_ke_at = -1;
    for (const ComponentFacts& f : facts) {
        if (f.is_ke) continue;
        if (!f.is_1ke)
            return {false, "",
                    x_label(f.index) + " has kappa=" + std::to_string(f.n - f.alpha - f.mu)};
        if (one_ke_at != -1)
            return {false, "", x_label(f.index) + " is a second 1-Konig-Egervary satellite"};
        one_ke_at = f.index;
    }

    const HeadSlack hs = head_slack(spec, facts);
    const std::string shape = hf_shape(spec, hs.f);

    if (one_ke_at >= 0) {
        if (hs.slack == 0) return {true, "(i)", ""};
        return {false, "", "H[F]=" + shape + " while " + x_label(one_ke_at) +
                               " is 1-Konig-Egervary, not Konig-Egervary"};
    }
    if (hs.slack == 1) {
        if (hs.f.size() == 1) return {true, "(ii)", ""};
        if (hs.f.size() == 2 && spec.head.adjacent(hs.f[0], hs.f[1])) return {true, "(iii)", ""};
        return {true, "(degenerate)", ""};  // shapes only reachable through empty satellites
    }
    if (hs.slack == 0)
        return {false, "",
                "every satellite is Konig-Egervary (corona is Konig-Egervary, not 1-KE)"};
    return {false, "", "H[F]=" + shape};
}

}  // namespace

int kappa_direct(const Graph& g, int max_vertices) {
    return g.vertex_count() - independence_number(g, max_vertices) - matching_number(g);
}

bool is_k_koenig_egervary(const Graph& g, int k, int max_vertices) {
    return kappa_direct(g, max_vertices) == k;
}

TheoremVerdict corona_ke_verdict(const CoronaSpec& spec) {
    spec.validate();
    return ke_verdict_from_facts(spec, all_component_facts(spec));
}

TheoremVerdict corona_1ke_verdict(const CoronaSpec& spec) {
    spec.validate();
    return one_ke_verdict_from_facts(spec, all_component_facts(spec));
}

bool corona_ke_with_perfect_matching(const CoronaSpec& spec) {
    spec.validate();
    return fast_kappa(spec) == 0 && 2 * fast_mu(spec) == corona_vertex_count(spec);
}

bool corona_ke_with_unique_perfect_matching(const CoronaSpec& spec) {
    spec.validate();
    for (const Graph& x : spec.family)
        if (kappa_direct(x) != 0 || !has_unique_almost_perfect_matching(x)) return false;
    return true;
}

bool uniform_corona_is_1ke(const Graph& head, const Graph& x) {
    // empty satellites collapse the corona to the head itself
    if (x.vertex_count() == 0) return kappa_direct(head) == 1;
    const int n = head.vertex_count();
    if (n == 1) {
        const int kappa = kappa_direct(x);
        const bool pm = has_perfect_matching(x);
        return (kappa == 1 && !pm) || (kappa == 0 && pm);
    }
    if (n == 2 && head.adjacent(0, 1))
        return kappa_direct(x) == 0 && has_perfect_matching(x);
    return false;
}

CliqueCoronaClass clique_corona_class(const Graph& head, int clique_size) {
    if (clique_size == 1) return CliqueCoronaClass::KE;
    const int n = head.vertex_count();
    // K1 o K2 = K3 and K1 o K3 = K4 are the 1-KE complete graphs; K1 o K4
    // = K5 already has deficiency 2, and K4 has a perfect matching so the
    // uniform-corona test rejects it as well
    if (n == 1 && (clique_size == 2 || clique_size == 3)) return CliqueCoronaClass::OneKE;
    if (n == 2 && head.adjacent(0, 1) && clique_size == 2) return CliqueCoronaClass::OneKE;
    return CliqueCoronaClass::Other;
}

std::string to_string(CliqueCoronaClass c) {
    switch (c) {
        case CliqueCoronaClass::KE: return "KE";
        case CliqueCoronaClass::OneKE: return "1-KE";
        case CliqueCoronaClass::Other: return "other";
    }
    return "other";
}

bool matching_number_at_least_order_minus_one(const Graph& g) {
    return matching_number(g) >= g.vertex_count() - 1;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::KeTheorem: return "ke-theorem";
        case Method::OneKeTheorem: return "1ke-theorem";
        case Method::FastFormula: return "fast-formula";
        case Method::Direct: return "direct";
    }
    return "direct";
}

std::string ke_class_name(int kappa) {
    return kappa == 0 ? "KE" : std::to_string(kappa) + "-KE";
}

std::string ClassificationReport::ke_class() const { return ke_class_name(kappa); }

ClassificationReport classify_corona(const CoronaSpec& spec) {
    spec.validate();
    ClassificationReport report;
    report.components = all_component_facts(spec);

    TheoremVerdict ke = ke_verdict_from_facts(spec, report.components);
    if (ke.holds) {
        report.kappa = 0;
        report.method = Method::KeTheorem;
        return report;
    }
    TheoremVerdict one_ke = one_ke_verdict_from_facts(spec, report.components);
    if (one_ke.holds) {
        report.kappa = 1;
        report.method = Method::OneKeTheorem;
        report.case_tag = one_ke.case_tag;
        return report;
    }
    report.kappa = fast_kappa(spec);
    report.method = Method::FastFormula;
    report.witness = one_ke.witness;
    return report;
}

ClassificationReport classify_direct(const Graph& g, int max_vertices) {
    ClassificationReport report;
    report.method = Method::Direct;
    VertexSet mis = maximum_independent_set(g, max_vertices);
    Matching m = maximum_matching(g);
    report.kappa = g.vertex_count() - static_cast<int>(mis.size()) - m.size();
    report.independent_set_certificate = std::move(mis);
    report.matching_certificate = std::move(m);
    return report;
}

}  // namespace kegraph
