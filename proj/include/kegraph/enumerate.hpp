#ifndef KEGRAPH_ENUMERATE_HPP
#define KEGRAPH_ENUMERATE_HPP

#include <string>
#include <vector>

#include "kegraph/graph.hpp"

namespace kegraph {

inline constexpr int kCanonicalMaxVertices = 8;
inline constexpr int kLabeledEnumMaxVertices = 6;
inline constexpr int kDedupEnumMaxVertices = 7;

/// Labeling-invariant key: minimum over all vertex permutations of the
/// upper-triangle bit string, prefixed with the vertex count. Equal keys
/// iff isomorphic. Factorial cost; refuses n > 8.
std::string canonical_form(const Graph& g);

/// All 2^(n(n-1)/2) labeled graphs in ascending upper-triangle bit-string
/// order (n <= 6).
std::vector<Graph> enumerate_labeled(int n);

/// One representative per isomorphism class, each in its canonical labeling,
/// in ascending canonical bit-string order (n <= 7).
std::vector<Graph> enumerate_nonisomorphic(int n);

std::vector<Graph> enumerate_graphs(int n, bool dedup);

std::string hex_key(const std::string& canonical_key);

}  // namespace kegraph

#endif
