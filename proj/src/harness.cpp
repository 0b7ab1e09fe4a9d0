#include "kegraph/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <set>

#include "kegraph/classify.hpp"
#include "kegraph/enumerate.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/graph6.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

namespace {

constexpr int kCounterexampleCapPerCheck = 20;

std::vector<Graph> heads_up_to(int max_head) {
    std::vector<Graph> heads;
    for (int n = 0; n <= max_head; ++n)
        for (Graph& g : enumerate_nonisomorphic(n)) heads.push_back(std::move(g));
    return heads;
}

// catalog_size^n with saturation at limit+1
long spec_count_for_head(int head_n, std::size_t catalog_size, long limit) {
    long count = 1;
    for (int i = 0; i < head_n; ++i) {
        if (count > limit / static_cast<long>(catalog_size) + 1) return limit + 1;
        count *= static_cast<long>(catalog_size);
    }
    return count;
}

class CheckRecorder {
public:
    explicit CheckRecorder(VerificationReport& report) : report_(report) {}

    CheckStats& stats(const std::string& name) {
        for (CheckStats& s : report_.checks)
            if (s.name == name) return s;
        report_.checks.push_back({name, 0, 0, 0});
        return report_.checks.back();
    }

    void record(const std::string& check, const std::string& subject, bool ok,
                const std::string& detail) {
        CheckStats& s = stats(check);
        if (ok) {
            ++s.passed;
            return;
        }
        ++s.failed;
        ++report_.total_failed;
        if (s.failed <= kCounterexampleCapPerCheck)
            report_.counterexamples.push_back({check, subject, detail});
    }

    void record_skip(const std::string& check) { ++stats(check).skipped; }

private:
    VerificationReport& report_;
};

void run_spec_checks(const CoronaSpec& spec, CheckRecorder& rec) {
    const std::string subject = format_spec_inline(spec);
    const int n = corona_vertex_count(spec);

    const CoronaGraph built = build_corona(spec);
    const int direct_mu = matching_number(built.graph);
    const std::vector<int> f = f_set(spec);

    int apex_mu_sum = 0;
    int component_mu_sum = 0;
    for (const Graph& x : spec.family) {
        apex_mu_sum += matching_number(apex_join(x));
        component_mu_sum += matching_number(x);
    }
    const int rhs = component_mu_sum + spec.head.vertex_count() - static_cast<int>(f.size());
    rec.record("mu-split-identity", subject, apex_mu_sum == rhs,
               "sum mu(apex(Xi))=" + std::to_string(apex_mu_sum) +
                   " vs sum mu(Xi)+|V(H)-F|=" + std::to_string(rhs));

    const int formula_mu = fast_mu(spec);
    rec.record("mu-formula", subject, formula_mu == direct_mu,
               "formula=" + std::to_string(formula_mu) +
                   " direct=" + std::to_string(direct_mu));

    rec.record("connected-iff-head-connected", subject,
               is_connected(built.graph) == is_connected(spec.head),
               std::string("corona ") +
                   (is_connected(built.graph) ? "connected" : "disconnected") + ", head " +
                   (is_connected(spec.head) ? "connected" : "disconnected"));

    bool satellites_edgeless = true;
    for (const Graph& x : spec.family)
        if (x.edge_count() > 0) satellites_edgeless = false;
    const bool bip_expected = is_bipartite(spec.head) && satellites_edgeless;
    rec.record("bipartite-iff-head-bipartite-and-satellites-edgeless", subject,
               is_bipartite(built.graph) == bip_expected,
               std::string("corona ") +
                   (is_bipartite(built.graph) ? "bipartite" : "not bipartite") + ", expected " +
                   (bip_expected ? "bipartite" : "not bipartite"));

    if (n > kDirectAlphaMaxVertices) {
        // remaining checks need a direct alpha solve on the full corona
        for (const char* check :
             {"alpha-formula", "ke-characterization", "1ke-characterization", "pm-corollary"})
            rec.record_skip(check);
        return;
    }

    const int direct_alpha = independence_number(built.graph);
    const int formula_alpha = fast_alpha(spec);
    rec.record("alpha-formula", subject, formula_alpha == direct_alpha,
               "formula=" + std::to_string(formula_alpha) +
                   " direct=" + std::to_string(direct_alpha));

    const int direct_kappa = n - direct_alpha - direct_mu;
    const bool ke_claim = corona_ke_verdict(spec).holds;
    rec.record("ke-characterization", subject, ke_claim == (direct_kappa == 0),
               std::string("theorem says ") + (ke_claim ? "KE" : "not KE") +
                   ", direct kappa=" + std::to_string(direct_kappa));

    const bool one_ke_claim = corona_1ke_verdict(spec).holds;
    rec.record("1ke-characterization", subject, one_ke_claim == (direct_kappa == 1),
               std::string("theorem says ") + (one_ke_claim ? "1-KE" : "not 1-KE") +
                   ", direct kappa=" + std::to_string(direct_kappa));

    const bool pm_claim = corona_ke_with_perfect_matching(spec);
    const bool pm_truth = direct_kappa == 0 && 2 * direct_mu == n;
    rec.record("pm-corollary", subject, pm_claim == pm_truth,
               std::string("corollary says ") + (pm_claim ? "KE with PM" : "no") +
                   ", direct says " + (pm_truth ? "KE with PM" : "no"));
}

void run_fixed_checks(CheckRecorder& rec) {
    // mu >= n-1 exactly on K0, K1, K2
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_nonisomorphic(n)) {
            const bool expected =
                n == 0 || n == 1 || (n == 2 && g.edge_count() == 1);
            rec.record("matching-bound-tiny-graphs", graph_token(g),
                       matching_number_at_least_order_minus_one(g) == expected,
                       "mu=" + std::to_string(matching_number(g)) +
                           " n=" + std::to_string(n));
        }

    // clique coronas H o K_q against the fast kappa
    for (int hn = 1; hn <= 3; ++hn)
        for (const Graph& head : enumerate_nonisomorphic(hn))
            for (int q = 1; q <= 5; ++q) {
                const CoronaSpec spec = clique_spec(head, q);
                const int kappa = fast_kappa(spec);
                const CliqueCoronaClass expected = kappa == 0   ? CliqueCoronaClass::KE
                                                   : kappa == 1 ? CliqueCoronaClass::OneKE
                                                                : CliqueCoronaClass::Other;
                const CliqueCoronaClass got = clique_corona_class(head, q);
                rec.record("clique-corona-table", format_spec_inline(spec), got == expected,
                           "table says " + to_string(got) + ", kappa=" + std::to_string(kappa));
            }

    // 0 <= kappa <= mu over every labeled graph on up to 6 vertices
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_labeled(n)) {
            const int mu = matching_number(g);
            const int kappa = g.vertex_count() - independence_number(g) - mu;
            rec.record("deficiency-bounds", write_graph6(g), kappa >= 0 && kappa <= mu,
                       "kappa=" + std::to_string(kappa) + " mu=" + std::to_string(mu));
        }
}

}  // namespace

std::vector<Graph> default_catalog() {
    return {
        Graph(),                                        // K0
        Graph::complete(1),                             // K1
        Graph::complete(2),                             // K2
        Graph::edgeless(2),                             // 2K1
        Graph::complete(3),                             // K3
        Graph::path(3),                                 // P3
        disjoint_union(Graph::complete(1), Graph::complete(2)),  // K1+K2
        Graph::edgeless(3),                             // 3K1
    };
}

VerificationReport verify_theorems(const VerifyOptions& options) {
    VerificationReport report;
    const std::vector<Graph>& cat = options.catalog;
    if (cat.empty()) {
        report.degenerate = true;
        report.corpus = "degenerate: empty catalog, nothing to check";
        return report;
    }

    const std::vector<Graph> heads = heads_up_to(options.max_head);
    long exhaustive_size = 0;
    for (const Graph& h : heads) {
        exhaustive_size += spec_count_for_head(h.vertex_count(), cat.size(),
                                               options.exhaustive_guard);
        if (exhaustive_size > options.exhaustive_guard) break;
    }

    CheckRecorder rec(report);

    if (!options.sample_count) {
        if (exhaustive_size > options.exhaustive_guard)
            throw BoundError("verify: exhaustive corpus exceeds " +
                             std::to_string(options.exhaustive_guard) +
                             " specs; use sampling mode");
        report.corpus = "heads n<=" + std::to_string(options.max_head) + " (" +
                        std::to_string(heads.size()) + " up to iso), catalog " +
                        std::to_string(cat.size()) + " members, " +
                        std::to_string(exhaustive_size) + " specs, mode=exhaustive";
        for (const Graph& head : heads) {
            const int hn = head.vertex_count();
            std::vector<std::size_t> pick(hn, 0);
            while (true) {
                CoronaSpec spec;
                spec.head = head;
                for (int i = 0; i < hn; ++i) spec.family.push_back(cat[pick[i]]);
                run_spec_checks(spec, rec);
                int pos = hn - 1;
                while (pos >= 0 && ++pick[pos] == cat.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
    } else {
        report.corpus = "heads n<=" + std::to_string(options.max_head) + " (" +
                        std::to_string(heads.size()) + " up to iso), catalog " +
                        std::to_string(cat.size()) + " members, mode=sample count=" +
                        std::to_string(*options.sample_count) +
                        " seed=" + std::to_string(options.seed);
        std::mt19937_64 rng(options.seed);
        for (long s = 0; s < *options.sample_count; ++s) {
            const Graph& head = heads[rng() % heads.size()];
            CoronaSpec spec;
            spec.head = head;
            for (int i = 0; i < head.vertex_count(); ++i)
                spec.family.push_back(cat[rng() % cat.size()]);
            run_spec_checks(spec, rec);
        }
    }

    run_fixed_checks(rec);
    return report;
}

void print_report(std::ostream& out, const VerificationReport& report) {
    out << "corpus: " << report.corpus << "\n";
    for (const CheckStats& s : report.checks) {
        out << "check " << s.name << ": " << s.passed << " passed, " << s.failed << " failed";
        if (s.skipped > 0) out << ", " << s.skipped << " skipped";
        out << "\n";
    }
    for (const Counterexample& c : report.counterexamples)
        out << "counterexample " << c.check << ": spec=" << c.subject << " " << c.detail << "\n";
    out << "counterexamples: " << report.total_failed << "\n";
}

std::vector<SearchHit> search_kappa(const SearchOptions& options) {
    const std::vector<Graph>& cat = options.catalog;
    std::vector<SearchHit> hits;
    if (options.limit <= 0) return hits;

    std::set<std::string> seen_keys;
    for (int hn = 0; hn <= options.max_head; ++hn) {
        if (hn > 0 && cat.empty()) break;
        for (const Graph& head : enumerate_nonisomorphic(hn)) {
            std::vector<std::size_t> pick(hn, 0);
            while (true) {
                CoronaSpec spec;
                spec.head = head;
                for (int i = 0; i < hn; ++i) spec.family.push_back(cat[pick[i]]);
                if (fast_kappa(spec) == options.kappa) {
                    std::string key;
                    bool fresh = true;
                    if (corona_vertex_count(spec) <= kCanonicalMaxVertices) {
                        key = canonical_form(build_corona(spec).graph);
                        fresh = seen_keys.insert(key).second;
                    }
                    if (fresh) {
                        hits.push_back({std::move(spec), options.kappa, std::move(key)});
                        if (static_cast<long>(hits.size()) >= options.limit) return hits;
                    }
                }
                int pos = hn - 1;
                while (pos >= 0 && ++pick[pos] == cat.size()) pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }
    return hits;
}

void print_hits(std::ostream& out, const std::vector<SearchHit>& hits) {
    for (const SearchHit& hit : hits) {
        out << (hit.canonical_key.empty() ? "-" : hex_key(hit.canonical_key)) << " "
            << hit.kappa << " " << format_spec_inline(hit.spec) << "\n";
    }
}

std::vector<BenchRow> run_benchmark(const std::vector<int>& sizes) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (int s : sizes) {
        BenchRow row;
        row.size = s;
        const CoronaSpec spec = uniform_spec(Graph::path(s), Graph::complete(2));
        row.corona_n = corona_vertex_count(spec);

        const auto t0 = clock::now();
        row.fast_kappa_value = fast_kappa(spec);
        const auto t1 = clock::now();
        row.fast_us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

        if (row.corona_n <= kDirectAlphaMaxVertices) {
            const CoronaGraph built = build_corona(spec);
            const auto t2 = clock::now();
            const int direct = kappa_direct(built.graph);
            const auto t3 = clock::now();
            row.direct_us =
                std::chrono::duration_cast<std::chrono::microseconds>(t3 - t2).count();
            row.direct_kappa_value = direct;
            row.agree = direct == row.fast_kappa_value;
        }
        rows.push_back(row);
    }
    return rows;
}

void print_benchmark(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "size\tn\tfast_us\tdirect_us\tagree\n";
    for (const BenchRow& row : rows) {
        out << row.size << "\t" << row.corona_n << "\t" << row.fast_us << "\t";
        if (row.direct_us)
            out << *row.direct_us << "\t" << (*row.agree ? "yes" : "no") << "\n";
        else
            out << "skipped\t-\n";
    }
}

}  // namespace kegraph
