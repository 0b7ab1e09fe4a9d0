#ifndef KEGRAPH_GRAPH6_HPP
#define KEGRAPH_GRAPH6_HPP

#include <string>
#include <string_view>

#include "kegraph/graph.hpp"

namespace kegraph {

// graph6 interchange format, single-byte size field only (n <= 62):
// byte 63+n, then ceil(n(n-1)/2 / 6) bytes of 63+(6 data bits, MSB first),
// upper-triangle bits in column order x(0,1),x(0,2),x(1,2),x(0,3),...
// Pad bits must be zero. The optional ">>graph6<<" header is accepted
// on parse and never emitted.

inline constexpr int kGraph6MaxVertices = 62;

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Token form used by spec and catalog files: "K0" for the empty graph,
/// plain graph6 otherwise. parse accepts both spellings for n = 0.
Graph parse_graph_token(std::string_view token);
std::string graph_token(const Graph& g);

}  // namespace kegraph

#endif
