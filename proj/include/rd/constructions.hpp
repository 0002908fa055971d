#ifndef RD_CONSTRUCTIONS_HPP
#define RD_CONSTRUCTIONS_HPP

#include <vector>

#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"

namespace rd {

// Result of peeling K_N down to a k-regular 1-factorable graph. The
// designated first factor defines labeled pairs e_i = (v_{i,1}, v_{i,2});
// the hub u = v_{N/2,1} keeps enough intact pairs that floor(k/2) of them
// can be added back inside N(u) as a matching.
struct PeelResult {
    Graph graph;                     // k-regular, even order
    OneFactorization factorization;  // k perfect matchings, edge ids into graph
    int hub = 0;
    std::vector<VertexPair> addable_matching;  // floor(k/2) disjoint non-edges in N(hub)
    std::vector<VertexPair> pair_labels;       // pair_labels[i-1] = (v_{i,1}, v_{i,2})
};

// Even-order graph of maximum size with rainbow disconnection number k,
// together with the k-color witness whose non-hub stars are all rainbow.
struct ExtremalWitness {
    Graph graph;  // even order n
    EdgeColoring coloring;
    int hub = 0;
    int size_formula_value = 0;  // floor((k+1)(n-1)/2)
};

// Peel 1-factors off K_N (N even) until the graph is degree-regular of the
// requested degree, following the fixed removal schedule that alternates
// around the hub's labeled pairs. 1 <= degree <= N-2.
PeelResult peel_factorable(int order, int degree);

// Maximum-size graph of even order n with rd = k, 1 <= k <= n-1, plus its
// rd-coloring: k = 1 gives a star, k = n-1 gives K_n properly colored, and
// in between the peel graph's factors take colors 1..k-1 while the added
// matching and hub edges share the fresh color k.
ExtremalWitness extremal_even(int n, int k);

// Minimum-size connected graph of order n with rd = k (n+k-2 edges):
// vertices 0 and 1 joined directly and by k-1 internally disjoint paths of
// length two, plus a pendant path to reach order n. 1 <= k <= n-1.
Graph min_size_rd(int n, int k);

}  // namespace rd

#endif
