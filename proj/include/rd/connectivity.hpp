#ifndef RD_CONNECTIVITY_HPP
#define RD_CONNECTIVITY_HPP

#include <utility>
#include <vector>

#include "rd/graph.hpp"

namespace rd {

struct ConnectivityProfile {
    int lambda_global = 0;
    int lambda_plus = 0;
    VertexPair witness_pair_min{-1, -1};  // attains lambda_global
    VertexPair witness_pair_max{-1, -1};  // attains lambda_plus
};

// lambda(u,v): minimum number of edges whose removal separates u from v,
// equal to the maximum number of edge-disjoint u-v paths. Unit-capacity
// max-flow with BFS augmentation. If min_cut is non-null it receives the
// edge ids of one minimum cut (sorted).
int local_edge_connectivity(const Graph& g, int u, int v, std::vector<int>* min_cut = nullptr);

// Stops augmenting once `bound` paths are found; returns min(lambda(u,v), bound).
int local_edge_connectivity_capped(const Graph& g, int u, int v, int bound);

int lambda_global(const Graph& g);

int lambda_plus(const Graph& g);

// True iff some pair has local edge connectivity >= k (early exit).
bool lambda_plus_at_least(const Graph& g, int k);

ConnectivityProfile connectivity_profile(const Graph& g);

// sigma_k: sum of k - d(x) over vertices with d(x) <= k.
long long sigma_k(const Graph& g, int k);

// Largest k+1 over k in 1..n-2 such that 2*e(G) > (k+1)(n-1) - sigma_k(G),
// evaluated in integer arithmetic; 1 when no k qualifies. A sound lower
// bound on lambda_plus.
int mader_lambda_plus_bound(const Graph& g);

}  // namespace rd

#endif
