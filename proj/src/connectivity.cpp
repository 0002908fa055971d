#include "rd/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace rd {

namespace {

// Residual network for unit-capacity undirected flow. Each undirected edge
// becomes arcs 2i and 2i+1 (mutual reverses), both with capacity 1.
struct UnitFlowNet {
    int n;
    std::vector<int> head;                 // arc id -> target vertex
    std::vector<signed char> residual;     // arc id -> remaining capacity
    std::vector<std::vector<int>> out;     // vertex -> arc ids

    explicit UnitFlowNet(const Graph& g) : n(g.n), out(g.n) {
        head.reserve(2 * g.edges.size());
        residual.assign(2 * g.edges.size(), 1);
        for (const auto& [a, b] : g.edges) {
            int arc = static_cast<int>(head.size());
            head.push_back(b);
            head.push_back(a);
            out[a].push_back(arc);
            out[b].push_back(arc + 1);
        }
    }

    // One BFS augmentation step; true if an s-t path was found and flipped.
    bool augment(int s, int t, std::vector<int>& parent_arc) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[s] = -2;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == t) break;
            for (int arc : out[v]) {
                int w = head[arc];
                if (residual[arc] > 0 && parent_arc[w] == -1) {
                    parent_arc[w] = arc;
                    q.push(w);
                }
            }
        }
        if (parent_arc[t] == -1) return false;
        for (int v = t; v != s;) {
            int arc = parent_arc[v];
            residual[arc] -= 1;
            residual[arc ^ 1] += 1;
            v = head[arc ^ 1];
        }
        return true;
    }

    // Vertices reachable from s in the residual network.
    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(n, false);
        std::vector<int> stack = {s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int arc : out[v]) {
                int w = head[arc];
                if (residual[arc] > 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }
};

int max_flow(const Graph& g, int u, int v, int cap, std::vector<int>* min_cut) {
    if (u == v)
        throw error(errc::same_vertex, "vertex " + std::to_string(u));
    UnitFlowNet net(g);
    std::vector<int> parent_arc(g.n);
    int flow = 0;
    while (flow < cap && net.augment(u, v, parent_arc)) ++flow;
    if (min_cut) {
        min_cut->clear();
        auto reach = net.residual_reachable(u);
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [a, b] = g.edges[i];
            if (reach[a] != reach[b]) min_cut->push_back(i);
        }
    }
    return flow;
}

}  // namespace

int local_edge_connectivity(const Graph& g, int u, int v, std::vector<int>* min_cut) {
    return max_flow(g, u, v, g.edge_count() + 1, min_cut);
}

int local_edge_connectivity_capped(const Graph& g, int u, int v, int bound) {
    return max_flow(g, u, v, bound, nullptr);
}

int lambda_global(const Graph& g) {
    if (g.n < 2)
        throw error(errc::trivial_graph, "lambda is undefined for n=" + std::to_string(g.n));
    int best = g.edge_count() + 1;
    for (int v = 1; v < g.n; ++v) best = std::min(best, local_edge_connectivity(g, 0, v));
    return best;
}

int lambda_plus(const Graph& g) {
    if (g.n < 2)
        throw error(errc::trivial_graph, "lambda_plus is undefined for n=" + std::to_string(g.n));
    if (!is_connected(g)) throw error(errc::disconnected, "lambda_plus requires a connected graph");
    return connectivity_profile(g).lambda_plus;
}

bool lambda_plus_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (local_edge_connectivity_capped(g, u, v, k) >= k) return true;
    return false;
}

ConnectivityProfile connectivity_profile(const Graph& g) {
    if (g.n < 2)
        throw error(errc::trivial_graph, "connectivity profile is undefined for n=" + std::to_string(g.n));
    ConnectivityProfile p;
    p.lambda_global = g.edge_count() + 1;
    p.lambda_plus = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            int lam = local_edge_connectivity(g, u, v);
            if (lam < p.lambda_global) {
                p.lambda_global = lam;
                p.witness_pair_min = {u, v};
            }
            if (lam > p.lambda_plus) {
                p.lambda_plus = lam;
                p.witness_pair_max = {u, v};
            }
        }
    }
    return p;
}

long long sigma_k(const Graph& g, int k) {
    long long sum = 0;
    for (int d : g.degrees())
        if (d <= k) sum += k - d;
    return sum;
}

int mader_lambda_plus_bound(const Graph& g) {
    int bound = 1;
    long long e2 = 2LL * g.edge_count();
    // The threshold is stated for order n >= k+2; out-of-range k are skipped.
    for (int k = 1; k <= g.n - 2; ++k) {
        if (e2 > static_cast<long long>(k + 1) * (g.n - 1) - sigma_k(g, k)) bound = k + 1;
    }
    return bound;
}

}  // namespace rd
