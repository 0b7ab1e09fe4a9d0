#ifndef KEGRAPH_HARNESS_HPP
#define KEGRAPH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kegraph/corona.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// The eight-member family catalog every structural case in the corona
/// characterizations needs: K0, K1, K2, 2K1, K3, P3, K1+K2, 3K1.
std::vector<Graph> default_catalog();

struct Counterexample {
    std::string check;
    std::string subject;  // inline spec or graph token
    std::string detail;   // both sides' values
};

struct CheckStats {
    std::string name;
    long passed = 0;
    long failed = 0;
    long skipped = 0;  // subject exceeded a direct-solve bound
};

struct VerificationReport {
    std::string corpus;
    bool degenerate = false;  // empty catalog: nothing to check
    std::vector<CheckStats> checks;
    std::vector<Counterexample> counterexamples;  // capped per check
    long total_failed = 0;

    bool all_passed() const { return total_failed == 0; }
};

struct VerifyOptions {
    int max_head = 3;
    std::vector<Graph> catalog;  // empty catalog yields a degenerate report
    std::optional<long> sample_count;
    std::uint64_t seed = 0;
    long exhaustive_guard = 1000000;  // spec corpora above this need sampling
};

/// Cross-checks every closed-form corona result against direct solves on
/// the built corona, plus the fixed small-graph checks. Deterministic
/// iteration order; the printed report is byte-identical across runs.
VerificationReport verify_theorems(const VerifyOptions& options);

void print_report(std::ostream& out, const VerificationReport& report);

struct SearchHit {
    CoronaSpec spec;
    int kappa = 0;
    std::string canonical_key;  // empty when the corona exceeds the canon bound
};

struct SearchOptions {
    int kappa = 2;
    int max_head = 3;
    std::vector<Graph> catalog;
    long limit = 20;
};

/// Streams the first `limit` specs (deterministic corpus order) whose
/// fast kappa equals the target, deduplicated by built-corona canonical
/// key whenever the corona is small enough to canonicalize.
std::vector<SearchHit> search_kappa(const SearchOptions& options);

void print_hits(std::ostream& out, const std::vector<SearchHit>& hits);

struct BenchRow {
    int size = 0;      // head path length s in P_s o K2
    int corona_n = 0;  // 3s
    std::int64_t fast_us = 0;
    int fast_kappa_value = 0;
    std::optional<std::int64_t> direct_us;  // absent: over the direct bound
    std::optional<int> direct_kappa_value;
    std::optional<bool> agree;
};

/// Times the closed-form classification of P_s o K2 against the direct
/// exponential solve on the built corona.
std::vector<BenchRow> run_benchmark(const std::vector<int>& sizes);

void print_benchmark(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace kegraph

#endif
