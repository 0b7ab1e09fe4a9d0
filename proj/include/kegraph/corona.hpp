#ifndef KEGRAPH_CORONA_HPP
#define KEGRAPH_CORONA_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kegraph/graph.hpp"

namespace kegraph {

/// A head graph H plus one satellite graph per head vertex. Position i of
/// the family is joined completely to head vertex i when the corona is
/// built. Family members may be empty (K0), edgeless, or disconnected.
struct CoronaSpec {
    Graph head;
    std::vector<Graph> family;  // size must equal head.vertex_count()

    void validate() const;  // throws on length mismatch
};

CoronaSpec uniform_spec(const Graph& head, const Graph& x);
CoronaSpec clique_spec(const Graph& head, int clique_size);

/// Number of vertices / edges the built corona will have, from the spec
/// alone: n(H) + sum n(X_i) and m(H) + sum m(X_i) + sum n(X_i).
int corona_vertex_count(const CoronaSpec& spec);
int corona_edge_count(const CoronaSpec& spec);

/// Where a corona vertex came from: head vertex `head_index`, or member
/// `member_index` of the satellite attached to that head vertex.
struct VertexOrigin {
    int head_index;
    int member_index;  // -1 for head vertices

    bool is_head() const { return member_index < 0; }
};

struct CoronaGraph {
    Graph graph;
    std::vector<VertexOrigin> origin;
    int head_size = 0;

    /// "v3" for head vertices, "u3_2" for satellites (both 1-based).
    std::string vertex_name(int v) const;
};

/// Head vertices first (0..n(H)-1), then the family blocks in order,
/// each keeping its internal labeling. Deterministic, so the graph6 of
/// the result is reproducible.
CoronaGraph build_corona(const CoronaSpec& spec);

/// Head positions whose satellite has a perfect matching. Equivalently
/// (and checked in tests) the positions where attaching an apex vertex
/// does not raise the matching number.
std::vector<int> f_set(const CoronaSpec& spec);

/// The defining route: positions with mu(X_i) = mu(apex_join(X_i)).
/// Slower; kept as a self-check behind the debug surface.
std::vector<int> f_set_by_definition(const CoronaSpec& spec);

/// alpha of the corona as sum of alpha(X_i), solved per component only,
/// plus alpha of the head subgraph induced by empty positions (a K0
/// satellite leaves its head vertex bare and free to join a maximum
/// independent set; the extra term vanishes when every satellite is
/// nonempty).
int fast_alpha(const CoronaSpec& spec);

/// mu of the corona as mu(H[F]) + sum mu(X_i) + |V(H) - F|.
int fast_mu(const CoronaSpec& spec);

/// n - alpha - mu of the corona, never building it.
int fast_kappa(const CoronaSpec& spec);

// Corona spec file: '#' starts a comment line; first remaining line is H
// in graph6; the next n(H) lines are X_1..X_n(H), one per line, "K0"
// denoting the empty graph. Catalog files are one token per line.
CoronaSpec parse_spec_file(std::istream& in, const std::string& source_name = "<input>");
CoronaSpec load_spec_file(const std::string& path);
std::vector<Graph> parse_catalog(std::istream& in, const std::string& source_name = "<input>");
std::vector<Graph> load_catalog(const std::string& path);

/// Head token followed by family tokens, space separated.
std::string format_spec_inline(const CoronaSpec& spec);

void write_dot(std::ostream& out, const CoronaGraph& corona);

}  // namespace kegraph

#endif
