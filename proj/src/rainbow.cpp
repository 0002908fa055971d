#include "rd/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "rd/connectivity.hpp"
#include "rd/error.hpp"

namespace rd {

namespace {

constexpr int kMaxCutOrder = 20;  // bipartition enumeration is 2^(n-2)

void check_coloring_length(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.edges.size())
        throw error(errc::length_mismatch,
                    "coloring has " + std::to_string(c.colors.size()) + " entries for " +
                        std::to_string(g.edges.size()) + " edges");
}

// Stamp-based distinctness test: epoch bumps instead of clearing.
struct ColorStamps {
    std::vector<int> stamp;
    int epoch = 0;

    explicit ColorStamps(int k) : stamp(static_cast<size_t>(k) + 1, 0) {}

    void reset() { ++epoch; }

    // true if color c was not seen since the last reset
    bool mark(int c) {
        if (stamp[static_cast<size_t>(c)] == epoch) return false;
        stamp[static_cast<size_t>(c)] = epoch;
        return true;
    }
};

}  // namespace

std::optional<CutCertificate> find_rainbow_cut(const Graph& g, const EdgeColoring& c, int u,
                                               int v) {
    if (u == v) throw error(errc::same_vertex, "u and v must differ");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw error(errc::vertex_out_of_range, "vertex out of range");
    if (g.n > kMaxCutOrder)
        throw error(errc::order_too_large,
                    "cut enumeration supports n <= " + std::to_string(kMaxCutOrder));
    check_coloring_length(g, c);

    std::vector<int> rest;  // vertices other than u, v; ascending
    rest.reserve(static_cast<size_t>(g.n) - 2);
    for (int x = 0; x < g.n; ++x)
        if (x != u && x != v) rest.push_back(x);

    const int m = static_cast<int>(g.edges.size());
    std::vector<char> in_a(static_cast<size_t>(g.n), 0);
    ColorStamps seen(c.k);

    const uint32_t total = 1u << rest.size();
    for (uint32_t mask = 0; mask < total; ++mask) {
        // mask 0 = everything except v beside u; set bits move rest[i] across
        std::fill(in_a.begin(), in_a.end(), 1);
        in_a[static_cast<size_t>(v)] = 0;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1u) in_a[static_cast<size_t>(rest[i])] = 0;

        seen.reset();
        bool rainbow = true;
        std::vector<int> crossing;
        for (int e = 0; e < m && rainbow; ++e) {
            const auto [a, b] = g.edges[static_cast<size_t>(e)];
            if (in_a[static_cast<size_t>(a)] == in_a[static_cast<size_t>(b)]) continue;
            crossing.push_back(e);
            rainbow = seen.mark(c.colors[static_cast<size_t>(e)]);
        }
        if (!rainbow) continue;

        CutCertificate cert;
        for (int x = 0; x < g.n; ++x)
            (in_a[static_cast<size_t>(x)] ? cert.side_a : cert.side_b).push_back(x);
        cert.crossing = std::move(crossing);  // edge ids scanned ascending
        cert.rainbow = true;
        return cert;
    }
    return std::nullopt;
}

bool is_rd_coloring(const Graph& g, const EdgeColoring& c) {
    check_coloring_length(g, c);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!find_rainbow_cut(g, c, u, v)) return false;
    return true;
}

bool star_rd_check(const Graph& g, const EdgeColoring& c, int u) {
    if (u < 0 || u >= g.n) throw error(errc::vertex_out_of_range, "vertex out of range");
    check_coloring_length(g, c);

    std::vector<std::vector<int>> incident(static_cast<size_t>(g.n));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        incident[static_cast<size_t>(g.edges[e].first)].push_back(static_cast<int>(e));
        incident[static_cast<size_t>(g.edges[e].second)].push_back(static_cast<int>(e));
    }
    ColorStamps seen(c.k);
    for (int x = 0; x < g.n; ++x) {
        if (x == u) continue;
        seen.reset();
        for (int e : incident[static_cast<size_t>(x)])
            if (!seen.mark(c.colors[static_cast<size_t>(e)])) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// exhaustive search for a rainbow disconnection coloring with k colors
// --------------------------------------------------------------------------
//
// A coloring works iff every vertex pair has a rainbow cut. Only cuts whose
// two sides are both connected matter: splitting a disconnected side's
// components off shrinks the crossing set, and subsets of rainbow sets stay
// rainbow. For the same reason only inclusion-minimal crossing sets per pair
// need tracking. The search assigns colors edge by edge and maintains, per
// surviving bipartition, the set of colors already crossing it; a repeat
// kills the bipartition, and a pair with no live bipartition prunes the
// branch. Color symmetry is broken by allowing at most one fresh color.

namespace {

struct BipStructure {
    std::vector<uint32_t> crossing;             // bip id -> edge mask
    std::vector<std::vector<int>> pairs_of;     // bip id -> pair ids it serves
    std::vector<std::vector<int>> bips_of_edge; // edge id -> bip ids
    int pair_count = 0;
};

bool submask_connected(const std::vector<uint32_t>& adj, uint32_t sub) {
    if (sub == 0) return false;
    const uint32_t start = sub & (~sub + 1);
    uint32_t reached = start;
    uint32_t frontier = start;
    while (frontier != 0) {
        uint32_t next = 0;
        while (frontier != 0) {
            const int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[static_cast<size_t>(x)] & sub & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == sub;
}

BipStructure build_bip_structure(const Graph& g) {
    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());

    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<size_t>(a)] |= 1u << b;
        adj[static_cast<size_t>(b)] |= 1u << a;
    }

    // Enumerate bipartitions with both sides connected, canonicalized by
    // putting vertex 0 on side S. Distinct crossing sets identify distinct
    // bipartitions (the sides are the two components left after removal).
    const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<uint32_t> sides;
    std::vector<uint32_t> crossings;
    std::unordered_map<uint32_t, int> seen_crossing;
    for (uint32_t t = 0; t < (1u << (n - 1)); ++t) {
        const uint32_t side = t << 1 | 1u;
        const uint32_t other = full & ~side;
        if (other == 0) continue;
        if (!submask_connected(adj, side) || !submask_connected(adj, other)) continue;
        uint32_t cross = 0;
        for (int e = 0; e < m; ++e) {
            const auto [a, b] = g.edges[static_cast<size_t>(e)];
            if (((side >> a) ^ (side >> b)) & 1u) cross |= 1u << e;
        }
        if (seen_crossing.emplace(cross, static_cast<int>(sides.size())).second) {
            sides.push_back(side);
            crossings.push_back(cross);
        }
    }

    BipStructure bs;
    bs.bips_of_edge.assign(static_cast<size_t>(m), {});
    std::unordered_map<int, int> global_to_local;  // bip id -> compacted id
    std::vector<int> kept;                         // compacted id -> bip id

    int pair_id = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++pair_id) {
            // candidates: bipartitions separating u from v
            std::vector<int> cand;
            for (size_t b = 0; b < sides.size(); ++b)
                if (((sides[b] >> u) ^ (sides[b] >> v)) & 1u) cand.push_back(static_cast<int>(b));
            if (cand.empty())
                throw std::logic_error("connected graph lost a separating bipartition");
            // keep inclusion-minimal crossing sets only
            std::vector<int> minimal;
            for (int b : cand) {
                bool dominated = false;
                for (int o : cand) {
                    if (o == b || dominated) continue;
                    const uint32_t co = crossings[static_cast<size_t>(o)];
                    const uint32_t cb = crossings[static_cast<size_t>(b)];
                    dominated = co != cb && (co & cb) == co;
                }
                if (!dominated) minimal.push_back(b);
            }
            for (int b : minimal) {
                auto [it, fresh] = global_to_local.emplace(b, static_cast<int>(kept.size()));
                if (fresh) {
                    kept.push_back(b);
                    bs.crossing.push_back(crossings[static_cast<size_t>(b)]);
                    bs.pairs_of.emplace_back();
                    uint32_t cross = crossings[static_cast<size_t>(b)];
                    while (cross != 0) {
                        const int e = std::countr_zero(cross);
                        cross &= cross - 1;
                        bs.bips_of_edge[static_cast<size_t>(e)].push_back(it->second);
                    }
                }
                bs.pairs_of[static_cast<size_t>(it->second)].push_back(pair_id);
            }
        }
    }
    bs.pair_count = pair_id;
    return bs;
}

class RdSearch {
  public:
    RdSearch(const Graph& g, const BipStructure& bs, int k)
        : bs_(bs),
          k_(k),
          m_(static_cast<int>(g.edges.size())),
          used_(bs.crossing.size(), 0),
          dead_(bs.crossing.size(), 0),
          alive_(static_cast<size_t>(bs.pair_count), 0),
          color_(static_cast<size_t>(m_), 0) {
        for (const auto& pairs : bs_.pairs_of)
            for (int p : pairs) ++alive_[static_cast<size_t>(p)];
    }

    std::optional<EdgeColoring> run() {
        if (!dfs(0, 0)) return std::nullopt;
        EdgeColoring c{k_, color_};
        return c;
    }

  private:
    struct TrailEntry {
        int bip;
        uint32_t prev_used;
        bool died;
    };

    // Record color c crossing every live bipartition through edge e; a
    // repeated color kills the bipartition. false once some pair has no
    // live bipartition left.
    bool apply(int e, int c) {
        const uint32_t bit = 1u << (c - 1);
        bool ok = true;
        for (int b : bs_.bips_of_edge[static_cast<size_t>(e)]) {
            if (dead_[static_cast<size_t>(b)]) continue;
            const uint32_t prev = used_[static_cast<size_t>(b)];
            if (prev & bit) {
                trail_.push_back({b, prev, true});
                dead_[static_cast<size_t>(b)] = 1;
                for (int p : bs_.pairs_of[static_cast<size_t>(b)])
                    if (--alive_[static_cast<size_t>(p)] == 0) ok = false;
                if (!ok) break;
            } else {
                trail_.push_back({b, prev, false});
                used_[static_cast<size_t>(b)] = prev | bit;
            }
        }
        return ok;
    }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry& t = trail_.back();
            if (t.died) {
                dead_[static_cast<size_t>(t.bip)] = 0;
                for (int p : bs_.pairs_of[static_cast<size_t>(t.bip)])
                    ++alive_[static_cast<size_t>(p)];
            } else {
                used_[static_cast<size_t>(t.bip)] = t.prev_used;
            }
            trail_.pop_back();
        }
    }

    bool dfs(int e, int max_used) {
        if (e == m_) return true;  // every pair still has a live bipartition
        const int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            const size_t mark = trail_.size();
            if (apply(e, c)) {
                color_[static_cast<size_t>(e)] = c;
                if (dfs(e + 1, std::max(max_used, c))) return true;
            }
            rollback(mark);
        }
        return false;
    }

    const BipStructure& bs_;
    int k_;
    int m_;
    std::vector<uint32_t> used_;
    std::vector<char> dead_;
    std::vector<int> alive_;
    std::vector<int> color_;
    std::vector<TrailEntry> trail_;
};

}  // namespace

RdReport rd_exact(const Graph& g, int edge_budget) {
    if (g.n < 2) throw error(errc::trivial_graph, "rd requires n >= 2");
    if (!is_connected(g)) throw error(errc::disconnected, "rd requires a connected graph");

    RdReport r;
    const auto profile = connectivity_profile(g);
    r.lambda = profile.lambda_global;
    r.lambda_plus = profile.lambda_plus;
    r.mader_bound = mader_lambda_plus_bound(g);

    EdgeColoring proper = vizing_color(g);
    r.chi_prime_upper = proper.k;

    if (is_tree(g)) {
        r.rd = 1;
        r.coloring = EdgeColoring{1, std::vector<int>(g.edges.size(), 1)};
        r.method = "tree-rule";
        return r;
    }

    const int m = static_cast<int>(g.edges.size());
    int lb = std::max(r.lambda_plus, r.mader_bound);
    int ub = std::min(proper.k, g.max_degree() + 1);

    // A proper coloring makes every star rainbow, so rd <= chi'. Vizing may
    // overshoot the chromatic index by one; close that gap exactly while the
    // instance is small enough for the exact solver.
    if (lb < ub && m <= 30) {
        EdgeColoring exact;
        const int chi = chromatic_index_exact(g, &exact);
        if (chi < ub) {
            ub = chi;
            proper = std::move(exact);
        }
    }
    if (lb > ub) throw std::logic_error("connectivity lower bound exceeds coloring upper bound");

    if (lb == ub) {
        r.rd = ub;
        r.coloring = std::move(proper);
        r.method = "sandwich-collapse";
        return r;
    }

    if (m > edge_budget) {
        r.method = "budget-exceeded";
        return r;
    }
    if (g.n > kMaxCutOrder)
        throw error(errc::order_too_large,
                    "coloring search supports n <= " + std::to_string(kMaxCutOrder));

    const BipStructure bs = build_bip_structure(g);
    for (int k = lb; k < ub; ++k) {
        RdSearch search(g, bs, k);
        if (auto found = search.run()) {
            // A witness with fewer distinct colors would have been found at
            // a smaller k, so all k classes are nonempty.
            std::vector<char> used(static_cast<size_t>(k) + 1, 0);
            int distinct = 0;
            for (int c : found->colors)
                if (!used[static_cast<size_t>(c)]) {
                    used[static_cast<size_t>(c)] = 1;
                    ++distinct;
                }
            if (distinct != k) throw std::logic_error("search witness uses fewer colors than k");
            r.rd = k;
            r.coloring = std::move(found);
            r.method = "search";
            return r;
        }
    }
    r.rd = ub;
    r.coloring = std::move(proper);
    r.method = "search";
    return r;
}

}  // namespace rd
