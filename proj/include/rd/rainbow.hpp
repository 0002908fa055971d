#ifndef RD_RAINBOW_HPP
#define RD_RAINBOW_HPP

#include <optional>
#include <string>
#include <vector>

#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"

namespace rd {

// Checkable witness for a u-v rainbow cut: a vertex bipartition whose
// crossing edges all carry distinct colors.
struct CutCertificate {
    std::vector<int> side_a;    // sorted, contains u
    std::vector<int> side_b;    // sorted, contains v
    std::vector<int> crossing;  // edge ids between the sides, sorted
    bool rainbow = false;
};

struct RdReport {
    int lambda = 0;
    int lambda_plus = 0;
    int mader_bound = 0;
    int chi_prime_upper = 0;  // colors used by the Vizing construction
    std::optional<int> rd;
    std::optional<EdgeColoring> coloring;
    std::string method;  // tree-rule | sandwich-collapse | search | budget-exceeded
};

inline constexpr int kDefaultEdgeBudget = 16;

// First rainbow cut separating u and v, scanning bipartitions with u fixed
// on side A over all 2^(n-2) placements of the other vertices (v stays on
// side B), in ascending mask order. n <= 20.
std::optional<CutCertificate> find_rainbow_cut(const Graph& g, const EdgeColoring& c, int u, int v);

// Every vertex pair admits a rainbow cut.
bool is_rd_coloring(const Graph& g, const EdgeColoring& c);

// Sufficient condition: the star of every vertex x != u is rainbow, so E_x
// separates x from anything. Linear-time verification for constructions.
bool star_rd_check(const Graph& g, const EdgeColoring& c, int u);

// Exact rainbow disconnection number. Trees answer immediately; otherwise
// the lower bound max(lambda_plus, Mader) and upper bound from proper
// colorings either meet or the gap is closed by exhaustive coloring search
// (requires |edges| <= edge_budget; otherwise the report carries bounds
// only and rd stays absent).
RdReport rd_exact(const Graph& g, int edge_budget = kDefaultEdgeBudget);

}  // namespace rd

#endif
