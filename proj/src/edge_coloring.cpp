#include "rd/edge_coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rd {

namespace {

void check_length(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw error(errc::length_mismatch, "coloring has " + std::to_string(c.colors.size()) +
                                               " entries for " + std::to_string(g.edge_count()) + " edges");
}

// Remap colors to 1..t preserving ascending order, dropping unused values.
EdgeColoring compress(std::vector<int> colors) {
    std::vector<int> used = colors;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& c : colors) {
        c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin()) + 1;
    }
    return EdgeColoring{static_cast<int>(used.size()), std::move(colors)};
}

}  // namespace

bool is_proper(const Graph& g, const EdgeColoring& c) {
    check_length(g, c);
    std::vector<std::vector<int>> seen(g.n);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edges[i];
        for (int v : {a, b}) {
            auto& s = seen[v];
            if (std::find(s.begin(), s.end(), c.colors[i]) != s.end()) return false;
            s.push_back(c.colors[i]);
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Vizing coloring (fan procedure with Kempe-chain recoloring).
// ---------------------------------------------------------------------------

namespace {

struct FanState {
    const Graph& g;
    int palette;                              // colors 1..palette = Delta+1
    std::vector<int> col;                     // edge id -> color, 0 = uncolored
    std::vector<std::vector<int>> at;         // at[v][c] = edge colored c at v, -1 if none
    std::vector<std::vector<int>> adj_edges;  // vertex -> incident edge ids

    explicit FanState(const Graph& graph)
        : g(graph),
          palette(graph.max_degree() + 1),
          col(graph.edge_count(), 0),
          at(graph.n, std::vector<int>(graph.max_degree() + 2, -1)),
          adj_edges(graph.n) {
        for (int i = 0; i < g.edge_count(); ++i) {
            adj_edges[g.edges[i].first].push_back(i);
            adj_edges[g.edges[i].second].push_back(i);
        }
    }

    int other(int e, int v) const {
        auto [a, b] = g.edges[e];
        return a == v ? b : a;
    }

    bool is_free(int v, int c) const { return at[v][c] == -1; }

    int smallest_free(int v) const {
        for (int c = 1; c <= palette; ++c)
            if (is_free(v, c)) return c;
        throw std::logic_error("no free color in a Delta+1 palette");
    }

    void set_color(int e, int c) {
        auto [a, b] = g.edges[e];
        if (col[e] != 0) {
            at[a][col[e]] = -1;
            at[b][col[e]] = -1;
        }
        col[e] = c;
        if (c != 0) {
            at[a][c] = e;
            at[b][c] = e;
        }
    }

    int edge_between(int a, int b) const {
        int e = g.edge_index(a, b);
        if (e < 0) throw std::logic_error("fan spoke is not an edge");
        return e;
    }

    // Maximal fan of u starting at v: each next spoke's color is free at the
    // previous fan vertex. Ties: smallest color, then smallest vertex.
    std::vector<int> build_fan(int u, int v) const {
        std::vector<int> fan = {v};
        std::vector<bool> in_fan(g.n, false);
        in_fan[v] = true;
        while (true) {
            int last = fan.back();
            int best_w = -1, best_c = 0;
            for (int e : adj_edges[u]) {
                if (col[e] == 0) continue;
                int w = other(e, u);
                if (in_fan[w] || !is_free(last, col[e])) continue;
                if (best_w == -1 || col[e] < best_c || (col[e] == best_c && w < best_w)) {
                    best_w = w;
                    best_c = col[e];
                }
            }
            if (best_w == -1) break;
            fan.push_back(best_w);
            in_fan[best_w] = true;
        }
        return fan;
    }

    // Flip colors c/d along the maximal alternating path starting at u.
    void invert_path(int u, int c, int d) {
        std::vector<std::pair<int, int>> flips;  // edge id, post-flip color
        int x = u, want = d;
        while (at[x][want] != -1) {
            int e = at[x][want];
            flips.emplace_back(e, col[e] == c ? d : c);
            x = other(e, x);
            want = (want == c) ? d : c;
        }
        for (const auto& [e, nc] : flips) set_color(e, 0);
        for (const auto& [e, nc] : flips) set_color(e, nc);
    }

    void color_edge(int e0) {
        int u = g.edges[e0].first;
        int v = g.edges[e0].second;
        std::vector<int> fan = build_fan(u, v);
        int c = smallest_free(u);
        int d = smallest_free(fan.back());
        if (c != d) invert_path(u, c, d);
        // d is now free at u; find the shortest fan prefix ending where d is
        // free, valid under the flipped colors, and rotate into it.
        int valid = 0;
        while (valid + 1 < static_cast<int>(fan.size())) {
            int e_next = edge_between(u, fan[valid + 1]);
            if (col[e_next] == 0 || !is_free(fan[valid], col[e_next])) break;
            ++valid;
        }
        int j = -1;
        for (int i = 0; i <= valid; ++i) {
            if (is_free(fan[i], d)) {
                j = i;
                break;
            }
        }
        if (j < 0) throw std::logic_error("fan rotation target missing");
        for (int i = 0; i < j; ++i) {
            int e_next = edge_between(u, fan[i + 1]);
            int shifted = col[e_next];
            set_color(e_next, 0);
            set_color(edge_between(u, fan[i]), shifted);
        }
        set_color(edge_between(u, fan[j]), d);
    }
};

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
    if (g.edge_count() == 0) return EdgeColoring{0, {}};
    FanState state(g);
    for (int e = 0; e < g.edge_count(); ++e) state.color_edge(e);
    return compress(state.col);
}

// ---------------------------------------------------------------------------
// Exact chromatic index.
// ---------------------------------------------------------------------------

namespace {

// Smallest-last order on the line graph: repeatedly remove the edge with the
// fewest remaining adjacent edges; color in reverse removal order.
std::vector<int> degeneracy_edge_order(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    std::vector<int> deg(m);
    for (int i = 0; i < m; ++i) deg[i] = static_cast<int>(adj[i].size());
    std::vector<bool> removed(m, false);
    std::vector<int> order;
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (!removed[i] && (pick == -1 || deg[i] < deg[pick])) pick = i;
        removed[pick] = true;
        order.push_back(pick);
        for (int j : adj[pick])
            if (!removed[j]) --deg[j];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

bool k_edge_colorable(const Graph& g, int k, std::vector<int>* out) {
    int m = g.edge_count();
    if (k <= 0) return m == 0;
    // Each color class is a matching, so k classes hold at most k*floor(n/2) edges.
    if (static_cast<long long>(m) > static_cast<long long>(k) * (g.n / 2)) return false;
    std::vector<int> order = degeneracy_edge_order(g);
    std::vector<int> col(m, 0);
    std::vector<std::uint32_t> used(g.n, 0);

    // Color j+1 may first appear only after color j (kills color symmetry).
    auto rec = [&](auto&& self, int pos, int max_used) -> bool {
        if (pos == m) return true;
        int e = order[pos];
        auto [a, b] = g.edges[e];
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            std::uint32_t bit = 1u << c;
            if ((used[a] | used[b]) & bit) continue;
            used[a] |= bit;
            used[b] |= bit;
            col[e] = c;
            if (self(self, pos + 1, std::max(max_used, c))) return true;
            used[a] &= ~bit;
            used[b] &= ~bit;
            col[e] = 0;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return false;
    if (out) *out = col;
    return true;
}

}  // namespace

int chromatic_index_exact(const Graph& g, EdgeColoring* witness) {
    if (g.edge_count() > 30)
        throw error(errc::too_large, "chromatic_index_exact supports |edges| <= 30, got " +
                                         std::to_string(g.edge_count()));
    if (g.edge_count() == 0) {
        if (witness) *witness = EdgeColoring{0, {}};
        return 0;
    }
    int delta = g.max_degree();
    std::vector<int> col;
    if (k_edge_colorable(g, delta, &col)) {
        if (witness) *witness = compress(std::move(col));
        return delta;
    }
    if (witness) *witness = vizing_color(g);  // class 2, so Vizing uses exactly delta+1
    return delta + 1;
}

OneFactorization one_factorize_complete_even(int n) {
    if (n < 2 || n % 2 != 0)
        throw error(errc::odd_order, "1-factorization of K_n needs even n >= 2, got n=" + std::to_string(n));
    OneFactorization f;
    int mod = n - 1;
    for (int r = 0; r < mod; ++r) {
        std::vector<int> factor;
        factor.push_back(pair_index(n, std::min(n - 1, r), std::max(n - 1, r)));
        for (int i = 1; i <= n / 2 - 1; ++i) {
            int a = (r + i) % mod;
            int b = (r - i + mod) % mod;
            factor.push_back(pair_index(n, std::min(a, b), std::max(a, b)));
        }
        std::sort(factor.begin(), factor.end());
        f.factors.push_back(std::move(factor));
    }
    return f;
}

}  // namespace rd
