#ifndef KEGRAPH_INDEPENDENCE_HPP
#define KEGRAPH_INDEPENDENCE_HPP

#include "kegraph/graph.hpp"

namespace kegraph {

inline constexpr int kDirectAlphaMaxVertices = 40;
inline constexpr int kBruteForceAlphaMaxVertices = 20;

/// Exact maximum independent set by branch and bound: branch on the
/// lowest-index maximum-degree vertex (include vs exclude), prune with the
/// incumbent and the bound alpha <= |remaining| - mu(remaining). The
/// returned set is sorted and reproducible run to run.
VertexSet maximum_independent_set(const Graph& g, int max_vertices = kDirectAlphaMaxVertices);

int independence_number(const Graph& g, int max_vertices = kDirectAlphaMaxVertices);

/// Exact alpha by plain include/exclude recursion, no bounds. Oracle for
/// tests and the CLI oracle command; requires n <= 20.
int brute_force_independence_number(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);

}  // namespace kegraph

#endif
