#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rd/connectivity.hpp"
#include "rd/constructions.hpp"
#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/rainbow.hpp"

using rd::Graph;
using rd::VertexPair;

namespace {

void check_peel_invariants(const rd::PeelResult& p, int order, int degree) {
    REQUIRE(p.graph.n == order);

    // degree-regular
    for (int d : p.graph.degrees()) CHECK(d == degree);

    // factors are perfect matchings partitioning the edge set
    REQUIRE(static_cast<int>(p.factorization.factors.size()) == degree);
    std::vector<int> seen(static_cast<size_t>(p.graph.edge_count()), 0);
    for (const auto& factor : p.factorization.factors) {
        REQUIRE(static_cast<int>(factor.size()) == order / 2);
        std::vector<bool> touched(static_cast<size_t>(order), false);
        for (int e : factor) {
            REQUIRE(e >= 0);
            REQUIRE(e < p.graph.edge_count());
            ++seen[static_cast<size_t>(e)];
            const auto& [a, b] = p.graph.edges[static_cast<size_t>(e)];
            CHECK_FALSE(touched[static_cast<size_t>(a)]);
            CHECK_FALSE(touched[static_cast<size_t>(b)]);
            touched[static_cast<size_t>(a)] = touched[static_cast<size_t>(b)] = true;
        }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

    // addable matching: floor(degree/2) pairwise disjoint non-edges inside N(hub)
    REQUIRE(static_cast<int>(p.addable_matching.size()) == degree / 2);
    std::set<int> matched;
    std::set<int> hub_nbrs;
    for (const auto& [a, b] : p.graph.edges) {
        if (a == p.hub) hub_nbrs.insert(b);
        if (b == p.hub) hub_nbrs.insert(a);
    }
    for (const auto& [a, b] : p.addable_matching) {
        CHECK(a != b);
        CHECK_FALSE(p.graph.has_edge(a, b));
        CHECK(hub_nbrs.count(a) == 1);
        CHECK(hub_nbrs.count(b) == 1);
        CHECK(matched.insert(a).second);
        CHECK(matched.insert(b).second);
    }
}

}  // namespace

TEST_CASE("peel fixtures") {
    // peeling K_4 to degree 2 leaves a 4-cycle
    const auto p42 = rd::peel_factorable(4, 2);
    check_peel_invariants(p42, 4, 2);
    const Graph c4 = rd::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(rd::canonical_code(p42.graph) == rd::canonical_code(c4));

    const auto p63 = rd::peel_factorable(6, 3);
    check_peel_invariants(p63, 6, 3);
    CHECK(p63.addable_matching.size() == 1);

    const auto p86 = rd::peel_factorable(8, 6);
    check_peel_invariants(p86, 8, 6);
    CHECK(p86.addable_matching.size() == 3);
}

TEST_CASE("peel at maximum degree leaves K_n minus a perfect matching") {
    for (int n = 4; n <= 8; n += 2) {
        const auto p = rd::peel_factorable(n, n - 2);
        check_peel_invariants(p, n, n - 2);
        std::vector<VertexPair> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!(a % 2 == 0 && b == a + 1)) edges.emplace_back(a, b);
        const Graph reference = rd::build_graph(n, edges);
        CHECK(rd::canonical_code(p.graph) == rd::canonical_code(reference));
    }
}

TEST_CASE("peel invariants across orders and degrees") {
    for (int n = 4; n <= 40; n += 2)
        for (int k = 1; k <= n - 2; ++k) check_peel_invariants(rd::peel_factorable(n, k), n, k);
}

TEST_CASE("peel argument validation") {
    CHECK_THROWS_AS(rd::peel_factorable(5, 2), rd::error);   // odd order
    CHECK_THROWS_AS(rd::peel_factorable(6, 0), rd::error);   // degree too small
    CHECK_THROWS_AS(rd::peel_factorable(6, 5), rd::error);   // degree too large
    try {
        rd::peel_factorable(5, 2);
    } catch (const rd::error& e) {
        CHECK(e.code() == rd::errc::odd_order);
    }
}

TEST_CASE("extremal_even fixtures") {
    const auto w63 = rd::extremal_even(6, 3);
    CHECK(w63.graph.edge_count() == 10);  // floor(4*5/2)
    CHECK(w63.size_formula_value == 10);
    CHECK(w63.coloring.k == 3);
    CHECK(rd::star_rd_check(w63.graph, w63.coloring, w63.hub));

    const auto w61 = rd::extremal_even(6, 1);
    CHECK(w61.graph.edge_count() == 5);
    CHECK(rd::is_tree(w61.graph));
    CHECK(*rd::rd_exact(w61.graph).rd == 1);

    const auto w65 = rd::extremal_even(6, 5);
    CHECK(w65.graph == rd::complete_graph(6));
    CHECK(w65.coloring.k == 5);
    CHECK(rd::is_proper(w65.graph, w65.coloring));
    CHECK(*rd::rd_exact(w65.graph).rd == 5);
}

TEST_CASE("extremal witnesses satisfy the full rd property at small orders") {
    for (int n = 4; n <= 10; n += 2) {
        for (int k = 1; k <= n - 1; ++k) {
            const auto w = rd::extremal_even(n, k);
            CHECK(rd::is_rd_coloring(w.graph, w.coloring));
        }
    }
}

TEST_CASE("extremal witnesses: size formula, star check, connectivity lower bound") {
    for (int n = 4; n <= 20; n += 2) {
        for (int k = 1; k <= n - 1; ++k) {
            const auto w = rd::extremal_even(n, k);
            REQUIRE(w.graph.n == n);
            CHECK(rd::is_connected(w.graph));
            CHECK(w.graph.edge_count() == (k + 1) * (n - 1) / 2);
            CHECK(w.graph.edge_count() == w.size_formula_value);
            CHECK(w.coloring.k == k);
            // every color class 1..k nonempty
            std::set<int> used(w.coloring.colors.begin(), w.coloring.colors.end());
            CHECK(static_cast<int>(used.size()) == k);
            CHECK(*used.begin() == 1);
            CHECK(*used.rbegin() == k);
            // the witness coloring certifies rd <= k
            CHECK(rd::star_rd_check(w.graph, w.coloring, w.hub));
            // lambda_plus >= k certifies rd >= k
            if (k >= 2) CHECK(rd::lambda_plus_at_least(w.graph, k));
        }
    }
}

TEST_CASE("extremal graphs have rd exactly k at solver scale") {
    for (int n = 4; n <= 6; n += 2)
        for (int k = 1; k <= n - 1; ++k) {
            const auto w = rd::extremal_even(n, k);
            const auto r = rd::rd_exact(w.graph, w.graph.edge_count());
            REQUIRE(r.rd.has_value());
            CHECK(*r.rd == k);
        }
}

TEST_CASE("extremal_even argument validation") {
    CHECK_THROWS_AS(rd::extremal_even(5, 2), rd::error);  // odd order
    CHECK_THROWS_AS(rd::extremal_even(6, 0), rd::error);
    CHECK_THROWS_AS(rd::extremal_even(6, 6), rd::error);
    try {
        rd::extremal_even(6, 6);
    } catch (const rd::error& e) {
        CHECK(e.code() == rd::errc::k_out_of_range);
    }
}

TEST_CASE("min_size_rd fixtures") {
    // k = 1: a tree on n vertices
    const Graph t = rd::min_size_rd(6, 1);
    CHECK(rd::is_tree(t));
    CHECK(t.edge_count() == 5);

    // n = 4, k = 3: K_4 minus one edge plus... exactly n+k-2 = 5 edges
    const Graph g43 = rd::min_size_rd(4, 3);
    CHECK(g43.edge_count() == 5);
    const Graph k4_minus = rd::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(rd::canonical_code(g43) == rd::canonical_code(k4_minus));

    const Graph g52 = rd::min_size_rd(5, 2);
    CHECK(g52.edge_count() == 5);
    CHECK(rd::is_connected(g52));
}

TEST_CASE("min_size_rd achieves rd = k with n + k - 2 edges") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const Graph g = rd::min_size_rd(n, k);
            REQUIRE(g.n == n);
            CHECK(rd::is_connected(g));
            CHECK(g.edge_count() == n + k - 2);
            const auto r = rd::rd_exact(g);
            REQUIRE(r.rd.has_value());
            CHECK(*r.rd == k);
        }
    }
}

TEST_CASE("min_size_rd argument validation") {
    CHECK_THROWS_AS(rd::min_size_rd(5, 0), rd::error);
    CHECK_THROWS_AS(rd::min_size_rd(5, 5), rd::error);
    CHECK_THROWS_AS(rd::min_size_rd(1, 1), rd::error);
}
