#include "kegraph/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>

#include "kegraph/errors.hpp"

namespace kegraph {

namespace {

// Column-order pair list: (0,1),(0,2),(1,2),(0,3),...
std::vector<std::pair<int, int>> triangle_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

Graph graph_from_triangle_bits(int n, std::uint64_t mask) {
    const auto pairs = triangle_pairs(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if ((mask >> (pairs.size() - 1 - t)) & 1) edges.push_back(pairs[t]);
    return Graph::from_edges(n, edges);
}

std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::array<std::array<bool, kCanonicalMaxVertices>, kCanonicalMaxVertices> adj{};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) adj[u][v] = adj[v][u] = g.adjacent(u, v);

    const auto pairs = triangle_pairs(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (adj[perm[pairs[t].first]][perm[pairs[t].second]])
                mask |= std::uint64_t{1} << (pairs.size() - 1 - t);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

std::string key_from_bits(int n, std::uint64_t mask) {
    const int bits = n * (n - 1) / 2;
    std::string key(1 + (bits + 7) / 8, '\0');
    key[0] = static_cast<char>(n);
    for (int t = 0; t < bits; ++t)
        if ((mask >> (bits - 1 - t)) & 1)
            key[1 + t / 8] |= static_cast<char>(0x80 >> (t % 8));
    return key;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.vertex_count() > kCanonicalMaxVertices)
        throw BoundError("canonical_form: limited to " +
                         std::to_string(kCanonicalMaxVertices) + " vertices");
    return key_from_bits(g.vertex_count(), canonical_bits(g));
}

std::vector<Graph> enumerate_labeled(int n) {
    if (n < 0 || n > kLabeledEnumMaxVertices)
        throw BoundError("enumerate_labeled: limited to " +
                         std::to_string(kLabeledEnumMaxVertices) + " vertices");
    const int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << bits);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
        out.push_back(graph_from_triangle_bits(n, mask));
    return out;
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
    if (n < 0 || n > kDedupEnumMaxVertices)
        throw BoundError("enumerate_nonisomorphic: limited to " +
                         std::to_string(kDedupEnumMaxVertices) + " vertices");
    // Grow by one vertex at a time: every (k+1)-vertex graph arises from a
    // k-vertex representative plus a new vertex with some neighborhood.
    std::vector<Graph> reps = {Graph()};
    for (int k = 0; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : reps) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << k); ++nb) {
                auto edges = g.edges();
                for (int v = 0; v < k; ++v)
                    if ((nb >> v) & 1) edges.emplace_back(v, k);
                Graph candidate = Graph::from_edges(k + 1, edges);
                const std::uint64_t cbits = canonical_bits(candidate);
                std::string key = key_from_bits(k + 1, cbits);
                if (!next.count(key))
                    next.emplace(std::move(key), graph_from_triangle_bits(k + 1, cbits));
            }
        }
        reps.clear();
        reps.reserve(next.size());
        for (auto& [key, g] : next) reps.push_back(std::move(g));
    }
    return reps;
}

std::vector<Graph> enumerate_graphs(int n, bool dedup) {
    return dedup ? enumerate_nonisomorphic(n) : enumerate_labeled(n);
}

std::string hex_key(const std::string& canonical_key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(canonical_key.size() * 2);
    for (unsigned char c : canonical_key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace kegraph
