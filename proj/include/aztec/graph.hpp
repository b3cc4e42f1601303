#pragma once

#include "aztec/region.hpp"

namespace aztec {

// Bipartite adjacency graph of a region: one vertex per square, edges between
// edge-adjacent squares. Vertices are sorted region squares, so vertex ids
// are stable across rebuilds of the same region.
struct MatchGraph {
    std::vector<Sq> verts;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    int size() const { return static_cast<int>(verts.size()); }
    int color(int v) const { return square_color(verts[v]); }
    int index_of(Sq s) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), s);
        assert(it != verts.end() && *it == s);
        return static_cast<int>(it - verts.begin());
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(verts.size());
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
};

inline MatchGraph dual_graph(const Region& r) {
    MatchGraph g;
    g.verts = r.squares;
    for (int v = 0; v < g.size(); ++v) {
        Sq s = g.verts[v];
        for (Sq nb : {Sq{s.x + 1, s.y}, Sq{s.x, s.y + 1}}) {
            auto it = std::lower_bound(g.verts.begin(), g.verts.end(), nb);
            if (it != g.verts.end() && *it == nb)
                g.edges.emplace_back(v, static_cast<int>(it - g.verts.begin()));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Structural summary used by the `build` CLI verb.
struct RegionReport {
    int squares = 0;
    int balance = 0;    // #white - #black
    int components = 0;
    int isolated = 0;   // squares with no neighbor in the region
};

inline RegionReport analyze_region(const Region& r) {
    MatchGraph g = dual_graph(r);
    RegionReport rep;
    rep.squares = r.size();
    rep.balance = r.balance();
    auto adj = g.adjacency();
    std::vector<int> comp(g.size(), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (adj[s].empty()) ++rep.isolated;
        if (comp[s] != -1) continue;
        ++rep.components;
        std::vector<int> stack{s};
        comp[s] = rep.components;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (comp[u] == -1) {
                    comp[u] = rep.components;
                    stack.push_back(u);
                }
        }
    }
    return rep;
}

// The four closed-form lattice families: frames AD_{m,n} with all but a kept
// set of cells deleted from one central row. Wide frames (m < n) lose white
// cells, tall frames (m > n) lose black cells; the deletion row is j = m for
// the even variants of each orientation pair and j = m-1 for the odd ones.
enum class RVariant { wide_even, wide_odd, tall_odd, tall_even };

inline const char* rvariant_name(RVariant v) {
    switch (v) {
        case RVariant::wide_even: return "R";
        case RVariant::wide_odd: return "R'";
        case RVariant::tall_odd: return "R''";
        case RVariant::tall_even: return "R'''";
    }
    return "?";
}

// Board cell carrying label t in the given variant's deletion row of a frame
// of height parameter m.
inline Cell r_label_cell(RVariant v, int m, int t) {
    switch (v) {
        case RVariant::wide_even: return Cell{2 * t - 1, m};
        case RVariant::wide_odd: return Cell{2 * t - 1, m - 1};
        case RVariant::tall_odd: return Cell{2 * t - 2, m};
        case RVariant::tall_even: return Cell{2 * t - 2, m - 1};
    }
    return {};
}

inline int r_label_count(RVariant v, int n) {
    return (v == RVariant::wide_even || v == RVariant::wide_odd) ? n : n + 1;
}

inline int r_kept_count(RVariant v, int m, int n) {
    return (v == RVariant::wide_even || v == RVariant::wide_odd) ? m : 2 * n + 1 - m;
}

// Validates (variant, m, n, kept labels) and returns the kept set sorted.
inline std::vector<int> validate_r_params(RVariant v, int m, int n, std::vector<int> kept) {
    bool wide = v == RVariant::wide_even || v == RVariant::wide_odd;
    bool even = v == RVariant::wide_even || v == RVariant::tall_even;
    if (m < 1 || n < 1) throw SpecError("lattice family needs m, n >= 1");
    if (m % 2 != (even ? 0 : 1))
        throw SpecError(std::string("variant ") + rvariant_name(v) + " needs m " +
                        (even ? "even" : "odd"));
    if (wide && !(m < n)) throw SpecError("wide variants need m < n");
    if (!wide && !(m > n)) throw SpecError("tall variants need m > n");
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw SpecError("kept labels must be distinct");
    int want = r_kept_count(v, m, n);
    if (want < 0) throw SpecError("tall variants need m <= 2n+1");
    if (static_cast<int>(kept.size()) != want)
        throw SpecError("kept label set has size " + std::to_string(kept.size()) +
                        ", variant requires " + std::to_string(want));
    int top = r_label_count(v, n);
    if (!kept.empty() && (kept.front() < 1 || kept.back() > top))
        throw SpecError("kept labels must lie in [1, " + std::to_string(top) + "]");
    return kept;
}

inline Region build_r_region(RVariant v, int m, int n, std::vector<int> kept) {
    kept = validate_r_params(v, m, n, std::move(kept));
    Region frame = build_aztec_rectangle(m, n);
    std::vector<Sq> gone;
    std::set<int> keep(kept.begin(), kept.end());
    for (int t = 1; t <= r_label_count(v, n); ++t)
        if (!keep.count(t)) gone.push_back(to_region(r_label_cell(v, m, t)));
    return region_minus(frame, gone);
}

inline MatchGraph build_r_graph(RVariant v, int m, int n, std::vector<int> kept) {
    return dual_graph(build_r_region(v, m, n, std::move(kept)));
}

}  // namespace aztec
