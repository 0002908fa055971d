#ifndef RD_EDGE_COLORING_HPP
#define RD_EDGE_COLORING_HPP

#include <vector>

#include "rd/graph.hpp"

namespace rd {

// Colors 1..k assigned per edge, aligned with the companion graph's
// canonical edge order. When reported with k colors, every class 1..k is
// nonempty.
struct EdgeColoring {
    int k = 0;
    std::vector<int> colors;

    bool operator==(const EdgeColoring& other) const = default;
};

// Edge-disjoint perfect matchings (edge ids) partitioning the edge set.
struct OneFactorization {
    std::vector<std::vector<int>> factors;
};

// No two edges sharing a vertex have equal colors.
bool is_proper(const Graph& g, const EdgeColoring& c);

// Proper coloring with at most max_degree+1 colors via the fan/recoloring
// procedure. Deterministic: fan extension ties break on smallest color,
// then smallest vertex.
EdgeColoring vizing_color(const Graph& g);

// Exact chromatic index, |edges| <= 30. Decides max_degree-colorability by
// backtracking; the answer is max_degree or max_degree+1. If witness is
// non-null it receives a proper coloring with exactly that many colors.
int chromatic_index_exact(const Graph& g, EdgeColoring* witness = nullptr);

// Circle-method 1-factorization of K_n for even n: vertex n-1 sits at the
// center; factor r pairs the center with r and (r+i) with (r-i) mod (n-1).
OneFactorization one_factorize_complete_even(int n);

}  // namespace rd

#endif
