#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kegraph/classify.hpp"
#include "kegraph/corona.hpp"
#include "kegraph/enumerate.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/graph6.hpp"
#include "kegraph/harness.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParseError = 2;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// first non-blank line of the file, or of stdin when path is "-"
std::string read_graph_line(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw kegraph::Error("cannot open " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        const std::string token = trim(line);
        if (!token.empty()) return token;
    }
    throw kegraph::Graph6Error(kegraph::Graph6Error::Kind::MalformedLength,
                               "no graph6 token found in " + path);
}

void print_field(const std::string& key, const std::string& value) {
    std::cout << key << "=" << (value.empty() ? "-" : value) << "\n";
}

int cmd_analyze(const std::string& path) {
    const kegraph::Graph g = kegraph::parse_graph6(read_graph_line(path));
    const kegraph::ClassificationReport report = kegraph::classify_direct(g);
    std::cout << "n=" << g.vertex_count() << "\n";
    std::cout << "m=" << g.edge_count() << "\n";
    std::cout << "alpha=" << report.independent_set_certificate->size() << "\n";
    std::cout << "mu=" << report.matching_certificate->size() << "\n";
    std::cout << "kappa=" << report.kappa << "\n";
    std::cout << "class=" << report.ke_class() << "\n";
    return 0;
}

int cmd_oracle(const std::string& path) {
    const kegraph::Graph g = kegraph::parse_graph6(read_graph_line(path));
    std::cout << "n=" << g.vertex_count() << "\n";
    std::cout << "m=" << g.edge_count() << "\n";
    std::cout << "alpha=" << kegraph::brute_force_independence_number(g) << "\n";
    std::cout << "mu=" << kegraph::brute_force_matching_number(g) << "\n";
    return 0;
}

int cmd_corona(const std::string& spec_path, const std::string& emit, bool analyze) {
    const kegraph::CoronaSpec spec = kegraph::load_spec_file(spec_path);
    const kegraph::CoronaGraph built = kegraph::build_corona(spec);

    if (emit == "graph6")
        std::cout << kegraph::write_graph6(built.graph) << "\n";
    else
        kegraph::write_dot(std::cout, built);

    if (!analyze) return 0;

    std::cout << "n=" << built.graph.vertex_count() << "\n";
    std::cout << "m=" << built.graph.edge_count() << "\n";
    const int alpha_fast = kegraph::fast_alpha(spec);
    const int mu_fast = kegraph::fast_mu(spec);
    const int kappa_fast = kegraph::fast_kappa(spec);
    std::cout << "alpha_fast=" << alpha_fast << "\n";
    std::cout << "mu_fast=" << mu_fast << "\n";
    std::cout << "kappa_fast=" << kappa_fast << "\n";
    std::cout << "class=" << kegraph::ke_class_name(kappa_fast) << "\n";
    if (built.graph.vertex_count() <= kegraph::kDirectAlphaMaxVertices) {
        const int alpha_direct = kegraph::independence_number(built.graph);
        const int mu_direct = kegraph::matching_number(built.graph);
        const int kappa_direct_value =
            built.graph.vertex_count() - alpha_direct - mu_direct;
        std::cout << "alpha_direct=" << alpha_direct << "\n";
        std::cout << "mu_direct=" << mu_direct << "\n";
        std::cout << "kappa_direct=" << kappa_direct_value << "\n";
        std::cout << "agree="
                  << (alpha_fast == alpha_direct && mu_fast == mu_direct ? "yes" : "no")
                  << "\n";
    } else {
        std::cout << "direct=skipped\n";
    }
    return 0;
}

int cmd_classify(const std::string& spec_path, const std::string& method) {
    const kegraph::CoronaSpec spec = kegraph::load_spec_file(spec_path);

    if (method == "direct") {
        const kegraph::CoronaGraph built = kegraph::build_corona(spec);
        const kegraph::ClassificationReport report = kegraph::classify_direct(built.graph);
        print_field("ke_class", report.ke_class());
        print_field("kappa", std::to_string(report.kappa));
        print_field("method", kegraph::method_name(report.method));
        print_field("case_tag", report.case_tag);
        print_field("witness", report.witness);
        return 0;
    }

    const kegraph::ClassificationReport report = kegraph::classify_corona(spec);
    print_field("ke_class", report.ke_class());
    print_field("kappa", std::to_string(report.kappa));
    print_field("method", kegraph::method_name(report.method));
    print_field("case_tag", report.case_tag);
    print_field("witness", report.witness);

    if (method != "both") return 0;
    const kegraph::CoronaGraph built = kegraph::build_corona(spec);
    const int direct = kegraph::kappa_direct(built.graph);
    print_field("kappa_direct", std::to_string(direct));
    print_field("agree", direct == report.kappa ? "yes" : "no");
    return direct == report.kappa ? 0 : kExitFailure;
}

int cmd_verify(int max_h, const std::optional<std::string>& catalog_path,
               std::optional<long> sample, std::uint64_t seed) {
    kegraph::VerifyOptions options;
    options.max_head = max_h;
    options.catalog =
        catalog_path ? kegraph::load_catalog(*catalog_path) : kegraph::default_catalog();
    options.sample_count = sample;
    options.seed = seed;
    const kegraph::VerificationReport report = kegraph::verify_theorems(options);
    kegraph::print_report(std::cout, report);
    return report.all_passed() ? 0 : kExitFailure;
}

int cmd_search(int kappa, int max_h, const std::optional<std::string>& catalog_path,
               long limit) {
    kegraph::SearchOptions options;
    options.kappa = kappa;
    options.max_head = max_h;
    options.catalog =
        catalog_path ? kegraph::load_catalog(*catalog_path) : kegraph::default_catalog();
    options.limit = limit;
    kegraph::print_hits(std::cout, kegraph::search_kappa(options));
    return 0;
}

int cmd_bench(const std::vector<int>& sizes) {
    kegraph::print_benchmark(std::cout, kegraph::run_benchmark(sizes));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independence, matching and Koenig-Egervary analysis of corona graphs"};
    app.require_subcommand(1);

    std::string analyze_path;
    CLI::App* analyze = app.add_subcommand("analyze", "alpha, mu and kappa of one graph6 graph");
    analyze->add_option("input", analyze_path, "graph6 file, or - for stdin")->required();

    std::string oracle_path;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force alpha and mu (debugging)");
    oracle->add_option("input", oracle_path, "graph6 file, or - for stdin")->required();

    std::string corona_path;
    std::string emit = "graph6";
    bool corona_analyze = false;
    CLI::App* corona = app.add_subcommand("corona", "build the corona from a spec file");
    corona->add_option("specfile", corona_path, "corona spec file")->required();
    corona->add_option("--emit", emit, "output format")
        ->check(CLI::IsMember({"graph6", "dot"}));
    corona->add_flag("--analyze", corona_analyze, "append fast formulas and a direct cross-check");

    std::string classify_path;
    std::string method = "theorem";
    CLI::App* classify = app.add_subcommand("classify", "Koenig-Egervary class of a corona spec");
    classify->add_option("specfile", classify_path, "corona spec file")->required();
    classify->add_option("--method", method, "classification route")
        ->check(CLI::IsMember({"theorem", "direct", "both"}));

    int verify_max_h = 3;
    std::optional<std::string> verify_catalog;
    std::optional<long> verify_sample;
    std::uint64_t verify_seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "cross-check the corona formulas exhaustively");
    verify->add_option("--max-h", verify_max_h, "largest head order")->required();
    verify->add_option("--catalog", verify_catalog, "family catalog file (one token per line)");
    verify->add_option("--sample", verify_sample, "sample this many specs instead of all");
    verify->add_option("--seed", verify_seed, "sampling seed");

    int search_kappa_target = 2;
    int search_max_h = 3;
    std::optional<std::string> search_catalog;
    long search_limit = 20;
    CLI::App* search = app.add_subcommand("search", "find corona specs with a given kappa");
    search->add_option("--kappa", search_kappa_target, "target Koenig deficiency")->required();
    search->add_option("--max-h", search_max_h, "largest head order")->required();
    search->add_option("--catalog", search_catalog, "family catalog file");
    search->add_option("--limit", search_limit, "stop after this many hits");

    std::vector<int> bench_sizes;
    CLI::App* bench = app.add_subcommand("bench", "fast formulas vs direct solve on P_s o K2");
    bench->add_option("--sizes", bench_sizes, "comma-separated path lengths")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_path);
        if (app.got_subcommand(oracle)) return cmd_oracle(oracle_path);
        if (app.got_subcommand(corona)) return cmd_corona(corona_path, emit, corona_analyze);
        if (app.got_subcommand(classify)) return cmd_classify(classify_path, method);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_max_h, verify_catalog, verify_sample, verify_seed);
        if (app.got_subcommand(search))
            return cmd_search(search_kappa_target, search_max_h, search_catalog, search_limit);
        if (app.got_subcommand(bench)) return cmd_bench(bench_sizes);
    } catch (const kegraph::Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const kegraph::SpecFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
