#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "rd/graph.hpp"

using rd::Graph;
using rd::VertexPair;

namespace {

Graph path_graph(int n) {
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return rd::build_graph(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return rd::build_graph(n, edges);
}

// Independent enumeration oracle: walk every labeled graph as a bool
// adjacency matrix, keep connected ones that are minimal in their
// permutation orbit, counting isomorphism classes without touching the
// production bit-mask machinery.
int count_connected_classes(int n) {
    const int bits = n * (n - 1) / 2;
    std::vector<int> perm(n);
    int classes = 0;
    for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
        bool adj[8][8] = {};
        int t = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++t)
                if (mask >> t & 1ul) adj[a][b] = adj[b][a] = true;

        // connectivity by depth-first search over the matrix
        std::vector<int> stack = {0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (adj[v][w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) continue;

        // orbit-minimality: no relabeling gives a smaller bitstring
        std::iota(perm.begin(), perm.end(), 0);
        bool minimal = true;
        do {
            int cmp = 0;  // -1 smaller, +1 larger, 0 equal so far
            int u = 0;
            for (int a = 0; a < n && cmp == 0; ++a)
                for (int b = a + 1; b < n && cmp == 0; ++b, ++u) {
                    const bool bit = adj[perm[a]][perm[b]];
                    const bool orig = mask >> u & 1ul;
                    if (bit != orig) cmp = bit ? 1 : -1;
                }
            if (cmp < 0) minimal = false;
        } while (minimal && std::next_permutation(perm.begin(), perm.end()));
        if (minimal) ++classes;
    }
    return classes;
}

}  // namespace

TEST_CASE("build_graph canonicalizes and validates") {
    const Graph k3 = rd::build_graph(3, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.edges == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});

    CHECK_THROWS_WITH_AS(rd::build_graph(4, {{0, 1}, {0, 1}}), "DuplicateEdge: edge (0,1)",
                         rd::error);
    CHECK_THROWS_AS(rd::build_graph(4, {{0, 1}, {1, 0}}), rd::error);
    CHECK_THROWS_AS(rd::build_graph(2, {{0, 0}}), rd::error);
    CHECK_THROWS_AS(rd::build_graph(3, {{0, 3}}), rd::error);

    try {
        rd::build_graph(2, {{0, 0}});
        FAIL("expected a loop error");
    } catch (const rd::error& e) {
        CHECK(e.code() == rd::errc::loop_edge);
    }
    try {
        rd::build_graph(3, {{0, 3}});
        FAIL("expected a range error");
    } catch (const rd::error& e) {
        CHECK(e.code() == rd::errc::vertex_out_of_range);
    }

    // idempotent under re-ingestion of its own output
    const Graph again = rd::build_graph(k3.n, k3.edges);
    CHECK(again == k3);
}

TEST_CASE("complete_graph sizes") {
    CHECK(rd::complete_graph(1).edge_count() == 0);
    CHECK(rd::complete_graph(4).edge_count() == 6);
    CHECK(rd::complete_graph(6).edge_count() == 15);
}

TEST_CASE("adjacency, degrees, and edge lookup") {
    const Graph g = rd::build_graph(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK(g.degrees() == std::vector<int>{1, 3, 1, 1});
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 1);
    CHECK(g.adjacency()[1] == std::vector<int>{0, 2, 3});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 3) == -1);
}

TEST_CASE("pair_index is the lexicographic position") {
    const int n = 6;
    int expected = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) CHECK(rd::pair_index(n, a, b) == expected++);
}

TEST_CASE("connectivity predicates") {
    CHECK(rd::is_connected(path_graph(4)));
    CHECK(rd::is_tree(path_graph(4)));
    CHECK(rd::is_connected(cycle_graph(4)));
    CHECK_FALSE(rd::is_tree(cycle_graph(4)));

    const Graph two_edges = rd::build_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(rd::is_connected(two_edges));
    CHECK_FALSE(rd::is_tree(two_edges));
}

TEST_CASE("enumerate_connected counts match the independent oracle") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto graphs = rd::enumerate_connected(n);
        CHECK(static_cast<int>(graphs.size()) == expected[n]);
        CHECK(static_cast<int>(graphs.size()) == count_connected_classes(n));
    }
    CHECK_THROWS_AS(rd::enumerate_connected(9), rd::error);
}

TEST_CASE("enumeration is sorted, connected, and duplicate-free") {
    for (int n = 2; n <= 6; ++n) {
        const auto graphs = rd::enumerate_connected(n);
        std::set<std::uint64_t> codes;
        int prev_edges = 0;
        for (const Graph& g : graphs) {
            CHECK(g.n == n);
            CHECK(rd::is_connected(g));
            CHECK(g.edge_count() >= prev_edges);
            prev_edges = g.edge_count();
            CHECK(codes.insert(rd::canonical_code(g)).second);
        }
    }
}

TEST_CASE("canonical codes are permutation-invariant") {
    std::mt19937 rng(20260816);
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : rd::enumerate_connected(n)) {
            const std::uint64_t code = rd::canonical_code(g);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int round = 0; round < 100; ++round) {
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<VertexPair> relabeled;
                for (const auto& [a, b] : g.edges) relabeled.emplace_back(perm[a], perm[b]);
                CHECK(rd::canonical_code(rd::build_graph(n, relabeled)) == code);
            }
        }
    }
}

TEST_CASE("graph_from_code inverts canonical codes") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : rd::enumerate_connected(n)) {
            const std::uint64_t code = rd::canonical_code(g);
            const Graph decoded = rd::graph_from_code(n, code);
            CHECK(rd::canonical_code(decoded) == code);
            CHECK(decoded.edge_count() == g.edge_count());
        }
    }
    CHECK_THROWS_AS(rd::graph_from_code(3, 0xffff), rd::error);
}
