#pragma once

#include <map>
#include <tuple>

#include "aztec/region.hpp"

namespace aztec {

// Odd window punched into a torus, centered at the board cell (cx, cy).
// placement (1 white, 0 black) names the majority color and must agree with
// the center parity.
struct TorusHole {
    int k = 0, l = 0;
    int cx = 0, cy = 0;
    int placement = 1;
    auto operator<=>(const TorusHole&) const = default;
};

// A separation cuts the lattice through one vertex: the anchor is split into
// two half-vertices, each keeping the pair of edges on its side of the cut.
// A vertical separation cuts along the j axis (west half / east half); a
// horizontal one cuts along the i axis (south half / north half). Either
// anchor color occurs: slits degenerate with the cut aligned to their run,
// and the run color depends on which shading drove the step. This geometry
// is pinned by the degenerate window evolution identities, which fail for
// every single-edge-deletion interpretation (see calibrate_separations in
// the verify module).
struct TorusSep {
    int axis = 0;  // 0 vertical, 1 horizontal
    int x = 0, y = 0;
    auto operator<=>(const TorusSep&) const = default;
};

struct TorusGraph {
    int m = 0, n = 0;  // board is [0..2n) x [0..2m), indices wrap
    // Lattice cells, sorted, followed by one extra node per separation: the
    // far half of the split anchor, carrying the same cell coordinates.
    std::vector<Cell> verts;
    int primary = 0;  // verts[0..primary) are the lattice cells
    struct Edge {
        int u = 0, v = 0;
        uint8_t sx = 0, sy = 0;  // seam-crossing flags per axis
    };
    std::vector<Edge> edges;
    std::vector<TorusHole> holes;
    std::vector<TorusSep> seps;

    Cell norm(Cell c) const {
        int w = 2 * n, h = 2 * m;
        return Cell{(c.i % w + w) % w, (c.j % h + h) % h};
    }
    // Index of a lattice cell; a split anchor resolves to its near half.
    int index_of(Cell c) const {
        c = norm(c);
        auto begin = verts.begin(), end = verts.begin() + primary;
        auto it = std::lower_bound(begin, end, c);
        if (it == end || *it != c) return -1;
        return static_cast<int>(it - begin);
    }
    int size() const { return static_cast<int>(verts.size()); }
    int color(int v) const { return cell_color(verts[v]); }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(verts.size());
        for (const Edge& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }
};

inline int torus_hole_majority(int k, int cy) {
    return ((cy + k) % 2 + 2) % 2 == 0 ? 1 : 0;
}

inline std::vector<Cell> torus_hole_cells(const TorusGraph& g, const TorusHole& h) {
    std::vector<Cell> cells;
    for (Cell c : odd_window_cells(h.k, h.l, h.cx, h.cy)) cells.push_back(g.norm(c));
    return cells;
}

inline TorusGraph build_torus(int m, int n, std::vector<TorusHole> holes,
                              std::vector<TorusSep> seps = {}) {
    if (m < 2 || n < 2) throw SpecError("torus needs m, n >= 2");
    TorusGraph g;
    g.m = m;
    g.n = n;

    std::sort(holes.begin(), holes.end());
    std::set<Cell> removed;
    for (const TorusHole& h : holes) {
        if (torus_hole_majority(h.k, h.cy) != h.placement)
            throw SpecError("invalid-placement: hole placement disagrees with center");
        auto cells = torus_hole_cells(g, h);
        std::set<Cell> mine(cells.begin(), cells.end());
        if (mine.size() != cells.size())
            throw SpecError("invalid-placement: hole wraps onto itself");
        for (Cell c : mine)
            if (!removed.insert(c).second)
                throw SpecError("invalid-placement: holes overlap");
    }
    g.holes = std::move(holes);

    for (int j = 0; j < 2 * m; ++j)
        for (int i = 0; i < 2 * n; ++i) {
            Cell c{i, j};
            if (is_vertex_cell(c) && !removed.count(c)) g.verts.push_back(c);
        }
    std::sort(g.verts.begin(), g.verts.end());
    g.primary = static_cast<int>(g.verts.size());

    // Split the separation anchors: the primary node keeps the near pair of
    // edges (west for vertical cuts, south for horizontal ones) and a new
    // node appended after the lattice cells takes the far pair.
    std::sort(seps.begin(), seps.end());
    for (size_t a = 0; a + 1 < seps.size(); ++a)
        if (seps[a] == seps[a + 1]) throw SpecError("duplicate separation");
    std::map<int, std::pair<int, int>> split;  // anchor -> (axis, far node)
    for (const TorusSep& s : seps) {
        Cell anchor = g.norm(Cell{s.x, s.y});
        if (!is_vertex_cell(anchor)) throw SpecError("separation anchor is a face cell");
        int u = g.index_of(anchor);
        if (u < 0) throw SpecError("separation anchor missing");
        split[u] = {s.axis, static_cast<int>(g.verts.size())};
        g.verts.push_back(anchor);
    }
    g.seps = std::move(seps);

    // Every lattice edge is recorded once, from its west endpoint; endpoints
    // on the far side of a cut are rerouted to the anchor's far half.
    for (int u = 0; u < g.primary; ++u) {
        Cell c = g.verts[u];
        for (int dj : {1, -1}) {
            Cell t{c.i + 1, c.j + dj};
            int v = g.index_of(t);
            if (v < 0) continue;
            TorusGraph::Edge e;
            e.u = u;
            e.v = v;
            // From the west endpoint the edge leaves eastward (di = 1, far
            // side of a vertical cut) and with this dj; from the east
            // endpoint it leaves westward with the opposite dj.
            if (auto it = split.find(u); it != split.end())
                if (it->second.first == 0 || dj > 0) e.u = it->second.second;
            if (auto it = split.find(v); it != split.end())
                if (it->second.first == 1 && dj < 0) e.v = it->second.second;
            e.sx = static_cast<uint8_t>(c.i + 1 >= 2 * n);
            e.sy = static_cast<uint8_t>(c.j + dj >= 2 * m || c.j + dj < 0);
            g.edges.push_back(e);
        }
    }
    return g;
}

}  // namespace aztec
