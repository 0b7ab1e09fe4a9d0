#include "kegraph/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "kegraph/errors.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

namespace {

class MisSolver {
public:
    explicit MisSolver(const Graph& g) : g_(g) {}

    VertexSet solve() {
        VertexSet all(g_.vertex_count());
        for (int v = 0; v < g_.vertex_count(); ++v) all[v] = v;
        VertexSet chosen;
        search(chosen, std::move(all));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void search(VertexSet& chosen, VertexSet cand) {
        // candidates with no neighbor among the candidates always go in
        std::size_t absorbed = 0;
        VertexSet active;
        for (int v : cand) {
            bool isolated = true;
            for (int w : cand)
                if (w != v && g_.adjacent(v, w)) {
                    isolated = false;
                    break;
                }
            if (isolated) {
                chosen.push_back(v);
                ++absorbed;
            } else {
                active.push_back(v);
            }
        }

        if (active.empty()) {
            if (chosen.size() > best_.size()) best_ = chosen;
        } else if (chosen.size() + active.size() > best_.size()) {
            const int mu_sub = matching_number(induced_subgraph(g_, active));
            if (chosen.size() + active.size() - mu_sub > best_.size()) {
                branch(chosen, active);
            }
        }
        chosen.resize(chosen.size() - absorbed);
    }

    void branch(VertexSet& chosen, const VertexSet& active) {
        // lowest-index vertex of maximum degree within the active set
        int pick = active.front();
        int pick_deg = -1;
        for (int v : active) {
            int d = 0;
            for (int w : active)
                if (w != v && g_.adjacent(v, w)) ++d;
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }

        VertexSet included;
        VertexSet excluded;
        for (int v : active) {
            if (v == pick) continue;
            excluded.push_back(v);
            if (!g_.adjacent(pick, v)) included.push_back(v);
        }

        chosen.push_back(pick);
        search(chosen, std::move(included));
        chosen.pop_back();
        search(chosen, std::move(excluded));
    }

    const Graph& g_;
    VertexSet best_;
};

int brute_force_alpha_rec(const std::vector<std::uint32_t>& nbr, std::uint32_t remaining) {
    if (!remaining) return 0;
    const int v = std::countr_zero(remaining);
    const std::uint32_t without = remaining & ~(std::uint32_t{1} << v);
    int best = brute_force_alpha_rec(nbr, without);
    best = std::max(best, 1 + brute_force_alpha_rec(nbr, without & ~nbr[v]));
    return best;
}

}  // namespace

VertexSet maximum_independent_set(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw BoundError("maximum_independent_set: graph exceeds the direct-solve bound of " +
                         std::to_string(max_vertices) + " vertices");
    return MisSolver(g).solve();
}

int independence_number(const Graph& g, int max_vertices) {
    return static_cast<int>(maximum_independent_set(g, max_vertices).size());
}

int brute_force_independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceAlphaMaxVertices)
        throw BoundError("brute_force_independence_number: limited to " +
                         std::to_string(kBruteForceAlphaMaxVertices) + " vertices");
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return brute_force_alpha_rec(nbr, all);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

}  // namespace kegraph
