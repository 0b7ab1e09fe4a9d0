#include "kegraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace kegraph {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    row_words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * row_words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v)) return;
    bits_[static_cast<std::size_t>(u) * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < row_words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * row_words_ + w]);
    return d;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    VertexSet out;
    for (int w = 0; w < row_words_; ++w) {
        std::uint64_t word = bits_[static_cast<std::size_t>(v) * row_words_ + w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && m_ == other.m_ && bits_ == other.bits_;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph make(GraphKind kind, int n) {
    switch (kind) {
        case GraphKind::complete: return Graph::complete(n);
        case GraphKind::path: return Graph::path(n);
        case GraphKind::cycle: return Graph::cycle(n);
        case GraphKind::edgeless: return Graph::edgeless(n);
    }
    throw std::invalid_argument("unknown graph kind");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.vertex_count();
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(shift + b.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex out of range");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(sorted.size()), edges);
}

Graph apex_join(const Graph& x) {
    const int n = x.vertex_count();
    auto edges = x.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(n, v);
    return Graph::from_edges(n + 1, edges);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("remove_edge: edge not present");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) edges.emplace_back(a, b);
    return Graph::from_edges(g.vertex_count(), edges);
}

Graph remove_vertex(const Graph& g, int v) {
    VertexSet keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    if (static_cast<int>(keep.size()) == g.vertex_count())
        throw std::out_of_range("remove_vertex: vertex out of range");
    return induced_subgraph(g, keep);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(perm[i], perm[j])) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    std::vector<char> in_a(g.vertex_count(), 0);
    for (int v : a) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("neighborhood: vertex out of range");
        in_a[v] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (in_a[w]) {
                out.push_back(v);
                break;
            }
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace kegraph
