#ifndef KEGRAPH_MATCHING_HPP
#define KEGRAPH_MATCHING_HPP

#include <utility>
#include <vector>

#include "kegraph/graph.hpp"

namespace kegraph {

inline constexpr int kBruteForceMatchingMaxEdges = 24;

/// A set of pairwise vertex-disjoint edges of some graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    int size() const { return static_cast<int>(edges.size()); }
    bool saturates(int v) const;
    VertexSet saturated() const;
};

/// True iff every edge is in g and no two edges share a vertex.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Exact maximum matching on general graphs (handles odd cycles via
/// blossom shrinking). Polynomial time; ties among maximum matchings are
/// broken arbitrarily but deterministically.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

/// Exact matching number by backtracking over the edge list. Oracle for
/// tests and the CLI oracle command; requires m <= 24.
int brute_force_matching_number(const Graph& g);

/// 2*mu = n. The empty graph counts as perfectly matched.
bool has_perfect_matching(const Graph& g);

/// n odd and 2*mu = n - 1.
bool has_almost_perfect_matching(const Graph& g);

/// A perfect matching M is unique iff deleting any one edge of M kills
/// all perfect matchings.
bool has_unique_perfect_matching(const Graph& g);

/// Exactly one vertex v has g-v perfectly matched, and that perfect
/// matching is unique.
bool has_unique_almost_perfect_matching(const Graph& g);

}  // namespace kegraph

#endif
