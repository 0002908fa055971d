#include "rd/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <thread>

namespace rd {

const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::order_too_large: return "OrderTooLarge";
        case errc::same_vertex: return "SameVertex";
        case errc::trivial_graph: return "TrivialGraph";
        case errc::disconnected: return "Disconnected";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::too_large: return "TooLarge";
        case errc::odd_order: return "OddOrder";
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::k_out_of_range: return "KOutOfRange";
    }
    return "UnknownError";
}

namespace {

std::string edge_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

int Graph::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Graph::min_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    VertexPair key{a, b};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it != edges.end() && *it == key) return static_cast<int>(it - edges.begin());
    return -1;
}

int pair_index(int n, int a, int b) {
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

Graph build_graph(int n, const std::vector<VertexPair>& edge_list) {
    Graph g;
    g.n = n;
    g.edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a == b) throw error(errc::loop_edge, "edge " + edge_str(a, b));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw error(errc::vertex_out_of_range, "edge " + edge_str(a, b) + " with n=" + std::to_string(n));
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (size_t i = 1; i < g.edges.size(); ++i) {
        if (g.edges[i] == g.edges[i - 1])
            throw error(errc::duplicate_edge, "edge " + edge_str(g.edges[i].first, g.edges[i].second));
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    auto adj = g.adjacency();
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.n - 1 && is_connected(g);
}

// ---------------------------------------------------------------------------
// Canonical codes and enumeration. Edge bit t of a mask corresponds to the
// pair with pair_index t; the code is the numerically smallest mask over all
// vertex permutations.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxEnumOrder = 8;

std::uint64_t graph_to_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const auto& [a, b] : g.edges) mask |= std::uint64_t{1} << pair_index(g.n, a, b);
    return mask;
}

Graph mask_to_graph(int n, std::uint64_t mask) {
    Graph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mask >> pair_index(n, a, b) & 1) g.edges.emplace_back(a, b);
    return g;
}

// For each permutation, where each edge bit lands after relabeling.
std::vector<std::vector<std::uint8_t>> edge_bit_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> maps;
    do {
        std::vector<std::uint8_t> m(n * (n - 1) / 2);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                int pa = perm[a], pb = perm[b];
                if (pa > pb) std::swap(pa, pb);
                m[pair_index(n, a, b)] = static_cast<std::uint8_t>(pair_index(n, pa, pb));
            }
        }
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t apply_bit_map(std::uint64_t mask, const std::vector<std::uint8_t>& map) {
    std::uint64_t out = 0;
    while (mask) {
        int t = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << map[t];
    }
    return out;
}

bool mask_connected(int n, std::uint64_t mask) {
    std::array<std::uint16_t, kMaxEnumOrder> adj{};
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (mask >> pair_index(n, a, b) & 1) {
                adj[a] |= std::uint16_t(1u << b);
                adj[b] |= std::uint16_t(1u << a);
            }
        }
    }
    std::uint16_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= static_cast<std::uint16_t>(frontier - 1);
            next |= adj[v];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (1u << n) - 1;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n > kMaxEnumOrder)
        throw error(errc::order_too_large, "canonical_code supports n <= 8, got n=" + std::to_string(g.n));
    std::uint64_t mask = graph_to_mask(g);
    std::uint64_t best = mask;
    for (const auto& map : edge_bit_maps(g.n)) best = std::min(best, apply_bit_map(mask, map));
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    if (n < 1 || n > kMaxEnumOrder)
        throw error(errc::order_too_large, "graph_from_code supports 1 <= n <= 8, got n=" + std::to_string(n));
    if (code >> (n * (n - 1) / 2) != 0)
        throw error(errc::vertex_out_of_range, "code has bits beyond the pair range for n=" + std::to_string(n));
    return mask_to_graph(n, code);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kMaxEnumOrder)
        throw error(errc::order_too_large, "enumerate_connected supports 1 <= n <= 8, got n=" + std::to_string(n));
    const auto maps = edge_bit_maps(n);
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;

    // Keep a mask iff it is the minimum over its permutation orbit; that
    // picks exactly one labeled graph per isomorphism class.
    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (!mask_connected(n, mask)) continue;
            bool canonical = true;
            for (const auto& map : maps) {
                if (apply_bit_map(mask, map) < mask) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) out.push_back(mask);
        }
    };

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::uint64_t> codes;
    if (workers <= 1 || total < 4096) {
        scan(0, total, codes);
    } else {
        std::vector<std::vector<std::uint64_t>> parts(workers);
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            threads.emplace_back([&, lo, hi, w] { scan(lo, hi, parts[w]); });
        }
        for (auto& t : threads) t.join();
        for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
    }

    std::sort(codes.begin(), codes.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Graph> graphs;
    graphs.reserve(codes.size());
    for (std::uint64_t code : codes) graphs.push_back(mask_to_graph(n, code));
    return graphs;
}

}  // namespace rd
