#ifndef RD_GRAPH_HPP
#define RD_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rd/error.hpp"

namespace rd {

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edges are stored as pairs
// (a,b) with a < b, sorted lexicographically; an edge's id is its position
// in this list. Graphs are immutable values: build once, never mutate.
struct Graph {
    int n = 0;
    std::vector<VertexPair> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Adjacency lists, each sorted ascending.
    std::vector<std::vector<int>> adjacency() const;

    std::vector<int> degrees() const;
    int max_degree() const;
    int min_degree() const;

    bool has_edge(int a, int b) const;
    // Position of edge {a,b} in the canonical list, or -1.
    int edge_index(int a, int b) const;

    bool operator==(const Graph& other) const = default;
};

// Position of pair (a,b), a<b, in the lexicographic list of all pairs on
// n vertices. The canonical edge order of complete_graph(n) follows it.
int pair_index(int n, int a, int b);

// Validates and canonicalizes: endpoints in range, no loops, no duplicates
// (each error names the offending edge), output sorted with a < b.
Graph build_graph(int n, const std::vector<VertexPair>& edge_list);

Graph complete_graph(int n);

bool is_connected(const Graph& g);

// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

// Bitstring of the upper-triangular adjacency matrix, minimized over all
// vertex permutations. Equal codes <=> isomorphic. Brute force, n <= 8.
std::uint64_t canonical_code(const Graph& g);

// Inverse of the code's bit layout: bit pair_index(n,a,b) set <=> edge {a,b}.
Graph graph_from_code(int n, std::uint64_t code);

// All connected graphs of order n, one representative per isomorphism
// class, sorted by edge count then canonical code. n <= 8.
std::vector<Graph> enumerate_connected(int n);

}  // namespace rd

#endif
