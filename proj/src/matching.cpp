#include "kegraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "kegraph/errors.hpp"

namespace kegraph {

namespace {

// Edmonds' algorithm: grow an alternating BFS tree from each exposed
// vertex, shrinking odd cycles (blossoms) to their base as they appear,
// and augment along the parent chain when another exposed vertex is hit.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : n_(g.vertex_count()),
          adj_(n_),
          mate_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          in_queue_(n_, false),
          in_blossom_(n_, false) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    }

    Matching solve() {
        greedy_init();
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) {
                int exposed = find_augmenting_path(v);
                if (exposed != -1) augment(exposed);
            }
        Matching m;
        for (int v = 0; v < n_; ++v)
            if (mate_[v] > v) m.edges.emplace_back(v, mate_[v]);
        std::sort(m.edges.begin(), m.edges.end());
        return m;
    }

private:
    void greedy_init() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (int w : adj_[v])
                if (mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_blossom_path(int v, int stop_base, int child) {
        while (base_[v] != stop_base) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract_blossom(int v, int w, std::queue<int>& q) {
        const int b = lowest_common_base(v, w);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_blossom_path(v, b, w);
        mark_blossom_path(w, b, v);
        for (int u = 0; u < n_; ++u)
            if (in_blossom_[base_[u]]) {
                base_[u] = b;
                if (!in_queue_[u]) {
                    in_queue_[u] = true;
                    q.push(u);
                }
            }
    }

    // Returns the exposed vertex ending an augmenting path from root,
    // with parent_ describing the path, or -1 if none exists.
    int find_augmenting_path(int root) {
        std::fill(in_queue_.begin(), in_queue_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::queue<int> q;
        q.push(root);
        in_queue_[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (base_[v] == base_[w] || mate_[v] == w) continue;
                if (w == root || (mate_[w] != -1 && parent_[mate_[w]] != -1)) {
                    // w is an even vertex of the tree: odd cycle
                    contract_blossom(v, w, q);
                } else if (parent_[w] == -1) {
                    parent_[w] = v;
                    if (mate_[w] == -1) return w;
                    in_queue_[mate_[w]] = true;
                    q.push(mate_[w]);
                }
            }
        }
        return -1;
    }

    void augment(int exposed) {
        int v = exposed;
        while (v != -1) {
            int pv = parent_[v];
            int next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> in_queue_;
    std::vector<bool> in_blossom_;
};

int brute_force_mu_rec(const std::vector<std::pair<int, int>>& edges, std::size_t i,
                       std::vector<char>& used, int count, int best) {
    if (count + static_cast<int>(edges.size() - i) <= best) return best;
    if (i == edges.size()) return std::max(best, count);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        best = brute_force_mu_rec(edges, i + 1, used, count + 1, best);
        used[u] = used[v] = 0;
    }
    return brute_force_mu_rec(edges, i + 1, used, count, best);
}

}  // namespace

bool Matching::saturates(int v) const {
    for (auto [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

VertexSet Matching::saturated() const {
    VertexSet out;
    for (auto [a, b] : edges) {
        out.push_back(a);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
        if (!g.adjacent(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

Matching maximum_matching(const Graph& g) { return BlossomSolver(g).solve(); }

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

int brute_force_matching_number(const Graph& g) {
    if (g.edge_count() > kBruteForceMatchingMaxEdges)
        throw BoundError("brute_force_matching_number: limited to " +
                         std::to_string(kBruteForceMatchingMaxEdges) + " edges");
    std::vector<char> used(g.vertex_count(), 0);
    return brute_force_mu_rec(g.edges(), 0, used, 0, 0);
}

bool has_perfect_matching(const Graph& g) {
    return 2 * matching_number(g) == g.vertex_count();
}

bool has_almost_perfect_matching(const Graph& g) {
    return g.vertex_count() % 2 == 1 && 2 * matching_number(g) == g.vertex_count() - 1;
}

bool has_unique_perfect_matching(const Graph& g) {
    Matching m = maximum_matching(g);
    if (2 * m.size() != g.vertex_count()) return false;
    // any second perfect matching avoids at least one edge of m
    for (auto [u, v] : m.edges)
        if (has_perfect_matching(remove_edge(g, u, v))) return false;
    return true;
}

bool has_unique_almost_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 == 0) return false;
    int exposed_candidate = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (has_perfect_matching(remove_vertex(g, v))) {
            if (exposed_candidate != -1) return false;
            exposed_candidate = v;
        }
    if (exposed_candidate == -1) return false;
    return has_unique_perfect_matching(remove_vertex(g, exposed_candidate));
}

}  // namespace kegraph
