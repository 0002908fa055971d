#include "rd/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rd/error.hpp"

namespace rd {

namespace {

// Pairs of the designated factor (factor 0 of the circle method on K_N,
// center vertex N-1): rim pairs (i, N-1-i) for i = 1..N/2-1 come first, the
// center edge (N-1, 0) last, so the hub u = v_{N/2,1} = N-1. Stored with
// the labeled orientation, i.e. pair_labels[i-1] = (v_{i,1}, v_{i,2}).
std::vector<VertexPair> designated_pairs(int n) {
    std::vector<VertexPair> labels;
    labels.reserve(static_cast<size_t>(n) / 2);
    for (int i = 1; i < n / 2; ++i) labels.emplace_back(i, n - 1 - i);
    labels.emplace_back(n - 1, 0);
    return labels;
}

}  // namespace

PeelResult peel_factorable(int order, int degree) {
    if (order < 2 || order % 2 != 0)
        throw error(errc::odd_order, "peel requires even order >= 2, got " + std::to_string(order));
    if (degree < 1 || degree > order - 2)
        throw error(errc::degree_out_of_range, "degree must be in 1.." + std::to_string(order - 2) +
                                                   ", got " + std::to_string(degree));

    const int n = order;
    const Graph kn = complete_graph(n);
    const OneFactorization full = one_factorize_complete_even(n);
    const std::vector<VertexPair> labels = designated_pairs(n);
    const int hub = n - 1;

    for (size_t i = 0; i < labels.size(); ++i)
        if (kn.edge_index(labels[i].first, labels[i].second) < 0)
            throw std::logic_error("designated pair is not a K_n edge");

    // Remove the designated factor, then one factor per stage. The factor
    // containing a hub edge (n-1, w) is factor w — every factor holds
    // exactly one center edge (n-1, r). Stage j targets the hub edge to
    // v_{n/2 - floor(j/2), 1 or 2} (even/odd j), eating labeled pairs from
    // the top down, one endpoint per stage.
    std::vector<char> removed(static_cast<size_t>(n - 1), 0);
    removed[0] = 1;
    int current_degree = n - 2;
    for (int j = 2; current_degree > degree; ++j, --current_degree) {
        const int idx = n / 2 - j / 2;
        const VertexPair& pair = labels[static_cast<size_t>(idx) - 1];
        const int w = j % 2 == 0 ? pair.first : pair.second;
        if (removed[static_cast<size_t>(w)]) throw std::logic_error("peel schedule repeats a factor");
        removed[static_cast<size_t>(w)] = 1;
        // pairs e_1..e_{floor(D/2)} must still have both hub edges present
        for (int i = 1; i <= (current_degree - 1) / 2; ++i)
            if (removed[static_cast<size_t>(labels[static_cast<size_t>(i) - 1].first)] ||
                removed[static_cast<size_t>(labels[static_cast<size_t>(i) - 1].second)])
                throw std::logic_error("peel intact-pair invariant broken");
    }

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(degree) / 2);
    std::vector<int> kept;
    for (int r = 0; r < n - 1; ++r) {
        if (removed[static_cast<size_t>(r)]) continue;
        kept.push_back(r);
        for (int id : full.factors[static_cast<size_t>(r)])
            edges.push_back(kn.edges[static_cast<size_t>(id)]);
    }

    PeelResult result;
    result.graph = build_graph(n, edges);
    result.hub = hub;
    result.pair_labels = labels;

    for (int d : result.graph.degrees())
        if (d != degree) throw std::logic_error("peel result is not regular");

    result.factorization.factors.reserve(kept.size());
    for (int r : kept) {
        std::vector<int> ids;
        ids.reserve(static_cast<size_t>(n) / 2);
        for (int id : full.factors[static_cast<size_t>(r)]) {
            const auto [a, b] = kn.edges[static_cast<size_t>(id)];
            ids.push_back(result.graph.edge_index(a, b));
        }
        std::sort(ids.begin(), ids.end());
        result.factorization.factors.push_back(std::move(ids));
    }

    // Addable matching: the first floor(k/2) labeled pairs survive intact —
    // both endpoints adjacent to the hub, the pair itself removed with the
    // designated factor and never restored, and all pairs vertex-disjoint.
    for (int i = 1; i <= degree / 2; ++i) {
        const VertexPair& pair = labels[static_cast<size_t>(i) - 1];
        if (!result.graph.has_edge(hub, pair.first) || !result.graph.has_edge(hub, pair.second) ||
            result.graph.has_edge(pair.first, pair.second))
            throw std::logic_error("addable pair invariant broken");
        result.addable_matching.push_back(pair);
    }
    return result;
}

ExtremalWitness extremal_even(int n, int k) {
    if (n < 2 || n % 2 != 0)
        throw error(errc::odd_order, "extremal witness requires even n >= 2, got " + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw error(errc::k_out_of_range,
                    "k must be in 1.." + std::to_string(n - 1) + ", got " + std::to_string(k));

    ExtremalWitness w;
    w.hub = n - 1;
    w.size_formula_value = (k + 1) * (n - 1) / 2;

    if (k == n - 1) {
        // K_n with the circle-method proper coloring: every star is rainbow.
        w.graph = complete_graph(n);
        const OneFactorization full = one_factorize_complete_even(n);
        std::vector<int> colors(w.graph.edges.size(), 0);
        for (size_t r = 0; r < full.factors.size(); ++r)
            for (int id : full.factors[r]) colors[static_cast<size_t>(id)] = static_cast<int>(r) + 1;
        w.coloring = EdgeColoring{k, std::move(colors)};
    } else if (k == 1) {
        // A star: with the hub at the center, every other star is a single
        // edge, so one color suffices and the star check holds.
        std::vector<VertexPair> edges;
        edges.reserve(static_cast<size_t>(n) - 1);
        for (int x = 0; x < n - 1; ++x) edges.emplace_back(x, n - 1);
        w.graph = build_graph(n, edges);
        w.coloring = EdgeColoring{1, std::vector<int>(edges.size(), 1)};
    } else {
        // Factors of the peel graph take colors 1..k-1; the addable matching
        // and the missing hub edges all take the fresh color k. Non-hub
        // stars stay rainbow: old edges inherit properness, and each vertex
        // gains at most one new edge.
        const PeelResult peel = peel_factorable(n, k - 1);
        std::vector<VertexPair> edges = peel.graph.edges;
        for (const VertexPair& pair : peel.addable_matching) edges.push_back(pair);
        for (int x = 0; x < n - 1; ++x)
            if (!peel.graph.has_edge(w.hub, x)) edges.emplace_back(x, w.hub);
        w.graph = build_graph(n, edges);

        std::vector<int> colors(w.graph.edges.size(), k);
        for (size_t r = 0; r < peel.factorization.factors.size(); ++r)
            for (int id : peel.factorization.factors[r]) {
                const auto [a, b] = peel.graph.edges[static_cast<size_t>(id)];
                colors[static_cast<size_t>(w.graph.edge_index(a, b))] = static_cast<int>(r) + 1;
            }
        w.coloring = EdgeColoring{k, std::move(colors)};
    }

    if (static_cast<int>(w.graph.edges.size()) != w.size_formula_value)
        throw std::logic_error("extremal witness size does not match the formula");
    return w;
}

Graph min_size_rd(int n, int k) {
    if (k < 1 || n < k + 1)
        throw error(errc::k_out_of_range,
                    "need 1 <= k <= n-1, got k=" + std::to_string(k) + " n=" + std::to_string(n));

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<size_t>(n + k) - 2);
    edges.emplace_back(0, 1);
    for (int x = 2; x <= k; ++x) {  // k-1 internally disjoint length-2 paths
        edges.emplace_back(0, x);
        edges.emplace_back(x, 1);
    }
    for (int prev = 1, v = k + 1; v < n; prev = v, ++v) edges.emplace_back(prev, v);
    return build_graph(n, edges);
}

}  // namespace rd
