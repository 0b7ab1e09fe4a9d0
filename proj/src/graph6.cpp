#include "kegraph/graph6.hpp"

#include <utility>
#include <vector>

#include "kegraph/errors.hpp"

namespace kegraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int bit_pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::MalformedLength, "graph6: empty input");

    const unsigned char size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte < 63 || size_byte > 126)
        throw Graph6Error(Graph6Error::Kind::MalformedLength,
                          "graph6: size byte outside the printable 63..126 range");
    if (size_byte == 126)
        throw Graph6Error(Graph6Error::Kind::UnsupportedSize,
                          "graph6: multi-byte size encodings (n > 62) are not supported");

    const int n = size_byte - 63;
    const int bits = bit_pair_count(n);
    const int bytes = (bits + 5) / 6;
    if (static_cast<int>(text.size()) - 1 < bytes)
        throw Graph6Error(Graph6Error::Kind::InsufficientData,
                          "graph6: fewer bit bytes than the size requires");
    if (static_cast<int>(text.size()) - 1 > bytes)
        throw Graph6Error(Graph6Error::Kind::TrailingData,
                          "graph6: trailing bytes after the bit section");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (int k = 0; k < bytes; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6Error::Kind::InvalidCharacter,
                              "graph6: bit byte outside the 63..126 range");
        const int value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const int bit = (value >> b) & 1;
            if (bit_index >= bits) {
                if (bit)
                    throw Graph6Error(Graph6Error::Kind::NonzeroPadding,
                                      "graph6: nonzero padding bits");
                continue;
            }
            if (bit) {
                // invert the column-order index back to the pair (i, j)
                int j = 1;
                int rem = bit_index;
                while (rem >= j) {
                    rem -= j;
                    ++j;
                }
                edges.emplace_back(rem, j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw Graph6Error(Graph6Error::Kind::UnsupportedSize,
                          "graph6: graphs with more than 62 vertices are not supported");

    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int acc_bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                acc_bits = 0;
            }
        }
    if (acc_bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - acc_bits))));
    return out;
}

Graph parse_graph_token(std::string_view token) {
    if (token == "K0") return Graph();
    return parse_graph6(token);
}

std::string graph_token(const Graph& g) {
    if (g.vertex_count() == 0) return "K0";
    return write_graph6(g);
}

}  // namespace kegraph
