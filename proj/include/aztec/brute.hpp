#pragma once

#include <bit>
#include <cstdint>

#include "aztec/bigint.hpp"
#include "aztec/graph.hpp"

namespace aztec {

namespace detail {

// 128-bit vertex set.
struct Mask {
    uint64_t lo = 0, hi = 0;
    friend Mask operator&(Mask a, Mask b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend Mask operator|(Mask a, Mask b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend Mask operator~(Mask a) { return {~a.lo, ~a.hi}; }
    friend bool operator==(Mask a, Mask b) { return a.lo == b.lo && a.hi == b.hi; }
    bool any() const { return lo || hi; }
    bool test(int v) const { return v < 64 ? (lo >> v) & 1 : (hi >> (v - 64)) & 1; }
    void set(int v) { v < 64 ? lo |= 1ull << v : hi |= 1ull << (v - 64); }
    void clear(int v) { v < 64 ? lo &= ~(1ull << v) : hi &= ~(1ull << (v - 64)); }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    int lowest() const {
        return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
    }
};

inline uint64_t count_rec(const std::vector<Mask>& adj, Mask remaining) {
    if (!remaining.any()) return 1;
    // Branch on a remaining vertex of minimum remaining degree.
    int best = -1, best_deg = 1000;
    Mask scan = remaining;
    while (scan.any()) {
        int v = scan.lowest();
        scan.clear(v);
        int deg = (adj[v] & remaining).count();
        if (deg < best_deg) {
            best_deg = deg;
            best = v;
            if (deg <= 1) break;
        }
    }
    if (best_deg == 0) return 0;
    uint64_t total = 0;
    Mask nbrs = adj[best] & remaining;
    Mask base = remaining;
    base.clear(best);
    while (nbrs.any()) {
        int u = nbrs.lowest();
        nbrs.clear(u);
        Mask next = base;
        next.clear(u);
        total += count_rec(adj, next);
    }
    return total;
}

}  // namespace detail

// Exhaustive perfect matching count by branch-and-count. Refuses graphs with
// more than `guard` vertices (hard cap 128). Intended as a ground-truth
// oracle on small instances.
inline Int count_matchings_brute(const std::vector<std::vector<int>>& adj, int guard = 48) {
    int n = static_cast<int>(adj.size());
    if (guard > 128) guard = 128;
    if (n > guard)
        throw EngineRefusal("brute engine refuses " + std::to_string(n) +
                            " vertices (guard " + std::to_string(guard) + ")");
    if (n == 0) return 1;
    if (n % 2 != 0) return 0;
    std::vector<detail::Mask> masks(n);
    for (int v = 0; v < n; ++v)
        for (int u : adj[v]) masks[v].set(u);
    detail::Mask all;
    for (int v = 0; v < n; ++v) all.set(v);
    return Int(detail::count_rec(masks, all));
}

inline Int count_matchings_brute(const MatchGraph& g, int guard = 48) {
    // Unbalanced bipartite graphs have no perfect matching.
    int bal = 0;
    for (int v = 0; v < g.size(); ++v) bal += g.color(v) ? 1 : -1;
    if (bal != 0) return 0;
    return count_matchings_brute(g.adjacency(), guard);
}

}  // namespace aztec
