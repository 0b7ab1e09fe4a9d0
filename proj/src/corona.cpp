#include "kegraph/corona.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kegraph/errors.hpp"
#include "kegraph/graph6.hpp"
#include "kegraph/independence.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

void CoronaSpec::validate() const {
    if (static_cast<int>(family.size()) != head.vertex_count())
        throw Error("corona spec: family has " + std::to_string(family.size()) +
                    " members but the head has " + std::to_string(head.vertex_count()) +
                    " vertices");
}

CoronaSpec uniform_spec(const Graph& head, const Graph& x) {
    return {head, std::vector<Graph>(head.vertex_count(), x)};
}

CoronaSpec clique_spec(const Graph& head, int clique_size) {
    return uniform_spec(head, Graph::complete(clique_size));
}

int corona_vertex_count(const CoronaSpec& spec) {
    spec.validate();
    int n = spec.head.vertex_count();
    for (const Graph& x : spec.family) n += x.vertex_count();
    return n;
}

int corona_edge_count(const CoronaSpec& spec) {
    spec.validate();
    int m = spec.head.edge_count();
    for (const Graph& x : spec.family) m += x.edge_count() + x.vertex_count();
    return m;
}

std::string CoronaGraph::vertex_name(int v) const {
    const VertexOrigin& o = origin.at(v);
    if (o.is_head()) return "v" + std::to_string(o.head_index + 1);
    return "u" + std::to_string(o.head_index + 1) + "_" + std::to_string(o.member_index + 1);
}

CoronaGraph build_corona(const CoronaSpec& spec) {
    spec.validate();
    const int head_n = spec.head.vertex_count();

    CoronaGraph out;
    out.head_size = head_n;
    std::vector<std::pair<int, int>> edges = spec.head.edges();
    for (int i = 0; i < head_n; ++i) out.origin.push_back({i, -1});

    int base = head_n;
    for (int i = 0; i < head_n; ++i) {
        const Graph& x = spec.family[i];
        for (auto [u, v] : x.edges()) edges.emplace_back(base + u, base + v);
        for (int j = 0; j < x.vertex_count(); ++j) {
            edges.emplace_back(i, base + j);
            out.origin.push_back({i, j});
        }
        base += x.vertex_count();
    }
    out.graph = Graph::from_edges(base, edges);
    return out;
}

std::vector<int> f_set(const CoronaSpec& spec) {
    spec.validate();
    std::vector<int> indices;
    for (int i = 0; i < spec.head.vertex_count(); ++i)
        if (has_perfect_matching(spec.family[i])) indices.push_back(i);
    return indices;
}

std::vector<int> f_set_by_definition(const CoronaSpec& spec) {
    spec.validate();
    std::vector<int> indices;
    for (int i = 0; i < spec.head.vertex_count(); ++i)
        if (matching_number(spec.family[i]) == matching_number(apex_join(spec.family[i])))
            indices.push_back(i);
    return indices;
}

int fast_alpha(const CoronaSpec& spec) {
    spec.validate();
    int total = 0;
    std::vector<int> bare;
    for (int i = 0; i < spec.head.vertex_count(); ++i) {
        if (spec.family[i].vertex_count() == 0)
            bare.push_back(i);
        else
            total += independence_number(spec.family[i]);
    }
    // bare head vertices are free to join a maximum independent set
    if (!bare.empty()) total += independence_number(induced_subgraph(spec.head, bare));
    return total;
}

int fast_mu(const CoronaSpec& spec) {
    spec.validate();
    const std::vector<int> f = f_set(spec);
    int total = matching_number(induced_subgraph(spec.head, f));
    for (const Graph& x : spec.family) total += matching_number(x);
    total += spec.head.vertex_count() - static_cast<int>(f.size());
    return total;
}

int fast_kappa(const CoronaSpec& spec) {
    return corona_vertex_count(spec) - fast_alpha(spec) - fast_mu(spec);
}

namespace {

// remaining non-comment, non-blank lines of a line-oriented file
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        lines.push_back(line.substr(start));
    }
    return lines;
}

Graph parse_token_or_rethrow(const std::string& token, const std::string& source_name,
                             const std::string& what) {
    try {
        return parse_graph_token(token);
    } catch (const Graph6Error& e) {
        throw SpecFileError(source_name + ": bad " + what + " token \"" + token +
                            "\": " + e.what());
    }
}

}  // namespace

CoronaSpec parse_spec_file(std::istream& in, const std::string& source_name) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw SpecFileError(source_name + ": no head graph line");

    CoronaSpec spec;
    spec.head = parse_token_or_rethrow(lines[0], source_name, "head");
    const int head_n = spec.head.vertex_count();
    if (static_cast<int>(lines.size()) < 1 + head_n)
        throw SpecFileError(source_name + ": head has " + std::to_string(head_n) +
                            " vertices but only " + std::to_string(lines.size() - 1) +
                            " family lines follow");
    if (static_cast<int>(lines.size()) > 1 + head_n)
        throw SpecFileError(source_name + ": trailing content after the family lines");
    for (int i = 0; i < head_n; ++i)
        spec.family.push_back(
            parse_token_or_rethrow(lines[1 + i], source_name, "family member " + std::to_string(i + 1)));
    return spec;
}

CoronaSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open " + path);
    return parse_spec_file(in, path);
}

std::vector<Graph> parse_catalog(std::istream& in, const std::string& source_name) {
    std::vector<Graph> catalog;
    for (const std::string& token : content_lines(in))
        catalog.push_back(parse_token_or_rethrow(token, source_name, "catalog"));
    return catalog;
}

std::vector<Graph> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecFileError("cannot open " + path);
    return parse_catalog(in, path);
}

std::string format_spec_inline(const CoronaSpec& spec) {
    std::string out = graph_token(spec.head);
    for (const Graph& x : spec.family) {
        out += ' ';
        out += graph_token(x);
    }
    return out;
}

void write_dot(std::ostream& out, const CoronaGraph& corona) {
    out << "graph corona {\n";
    for (int v = 0; v < corona.graph.vertex_count(); ++v) {
        out << "  " << corona.vertex_name(v);
        if (corona.origin[v].is_head()) out << " [shape=box]";
        out << ";\n";
    }
    for (auto [u, v] : corona.graph.edges())
        out << "  " << corona.vertex_name(u) << " -- " << corona.vertex_name(v) << ";\n";
    out << "}\n";
}

}  // namespace kegraph
