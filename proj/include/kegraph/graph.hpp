#ifndef KEGRAPH_GRAPH_HPP
#define KEGRAPH_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace kegraph {

/// A vertex subset of some graph, kept sorted ascending without duplicates.
using VertexSet = std::vector<int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a packed bit matrix: membership queries are O(1), neighbor
/// iteration is O(n/64). Loops are rejected at construction, symmetry is
/// maintained by construction, and the edge count is cached. All operations
/// that "modify" a graph return a new value; sharing across threads is safe.
class Graph {
public:
    Graph() = default;  // the empty graph K0
    explicit Graph(int n);

    static Graph edgeless(int n);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);  // requires n >= 3
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void add_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int row_words_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class GraphKind { complete, path, cycle, edgeless };

/// Standard labeled constructions; path edges are (i,i+1), cycle adds (n-1,0).
Graph make(GraphKind kind, int n);

/// Vertices of b shifted up by a.vertex_count(); no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by s, relabeled 0..|s|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// New vertex (index x.vertex_count()) joined to every vertex of x.
Graph apex_join(const Graph& x);

Graph remove_edge(const Graph& g, int u, int v);
Graph remove_vertex(const Graph& g, int v);

/// Relabel: vertex i of the result takes the role of perm[i] in g.
Graph permuted(const Graph& g, const std::vector<int>& perm);

/// N(a) = vertices with a neighbor in a; may intersect a.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

bool is_connected(const Graph& g);  // true for n <= 1
bool is_bipartite(const Graph& g);

}  // namespace kegraph

#endif
