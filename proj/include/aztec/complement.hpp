#pragma once

#include <optional>

#include "aztec/formulas.hpp"
#include "aztec/graph.hpp"
#include "aztec/torus.hpp"

namespace aztec {

// Graph in board coordinates, optionally wrapped (wi, wj are the periods;
// 0 means unbounded in that direction, and the two are either both 0 or both
// positive).
struct BoardGraph {
    int wi = 0, wj = 0;
    std::vector<Cell> verts;                   // normalized, sorted
    std::vector<std::pair<Cell, Cell>> edges;  // normalized endpoints, a < b

    Cell norm(Cell c) const {
        if (wi == 0) return c;
        return Cell{(c.i % wi + wi) % wi, (c.j % wj + wj) % wj};
    }
    bool has_vertex(Cell c) const {
        c = norm(c);
        return std::binary_search(verts.begin(), verts.end(), c);
    }
};

inline BoardGraph board_from_match(const MatchGraph& g) {
    BoardGraph b;
    for (Sq s : g.verts) b.verts.push_back(to_board(s));
    std::sort(b.verts.begin(), b.verts.end());
    for (auto [u, v] : g.edges) {
        Cell a = to_board(g.verts[u]), c = to_board(g.verts[v]);
        b.edges.emplace_back(std::min(a, c), std::max(a, c));
    }
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

inline MatchGraph match_from_board(const BoardGraph& b) {
    assert(b.wi == 0 && "planar conversion of a wrapped graph");
    Region r;
    for (Cell c : b.verts) r.squares.push_back(to_region(c));
    r.normalize();
    MatchGraph g;
    g.verts = r.squares;
    for (auto [a, c] : b.edges) g.edges.emplace_back(g.index_of(to_region(a)), g.index_of(to_region(c)));
    for (auto& [u, v] : g.edges)
        if (u > v) std::swap(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline BoardGraph board_from_torus(const TorusGraph& g) {
    assert(g.seps.empty() && "split anchors have no board representation");
    BoardGraph b;
    b.wi = 2 * g.n;
    b.wj = 2 * g.m;
    b.verts = g.verts;
    for (const auto& e : g.edges) {
        Cell a = g.verts[e.u], c = g.verts[e.v];
        b.edges.emplace_back(std::min(a, c), std::max(a, c));
    }
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

// Rebuilds a torus graph (with seam flags) from a wrapped board graph. Hole
// and separation metadata is not reconstructed.
inline TorusGraph torus_from_board(const BoardGraph& b) {
    assert(b.wi > 0 && b.wi % 2 == 0 && b.wj % 2 == 0);
    TorusGraph g;
    g.n = b.wi / 2;
    g.m = b.wj / 2;
    g.verts = b.verts;
    g.primary = static_cast<int>(g.verts.size());
    for (auto [a, c] : b.edges) {
        TorusGraph::Edge e;
        e.u = g.index_of(a);
        e.v = g.index_of(c);
        int di = std::abs(a.i - c.i), dj = std::abs(a.j - c.j);
        assert((di == 1 || di == b.wi - 1) && (dj == 1 || dj == b.wj - 1));
        e.sx = static_cast<uint8_t>(di != 1);
        e.sy = static_cast<uint8_t>(dj != 1);
        g.edges.push_back(e);
    }
    return g;
}

// One maximal straight run of present cells, with its flanking vertices.
struct CompletionPath {
    int axis = 0;  // 0 horizontal (along i), 1 vertical (along j)
    bool ring = false;
    std::vector<Cell> cells;
    Cell tip_a, tip_b;  // meaningless for rings
    int type = 0;       // 0 for rings, else (#tips present in H) - 1
};

struct Completion {
    bool ok = false;
    std::string error;
    int sigma = 0;
    std::vector<Cell> cells;       // present cells of the decomposition
    std::vector<Cell> x_vertices;  // tip vertices, both axes
    std::vector<CompletionPath> paths[2];
    long t_axis[2] = {0, 0};
    BoardGraph result;  // the complementary graph H'
};

// Cellular complementation: decomposes H into the sigma-class faces that
// carry its edges, checks that H misses V(G) only at extremal positions, and
// toggles those extremal vertices. When it applies, M(H) = 2^t M(H').
inline Completion cellular_complement(const BoardGraph& h, int sigma) {
    Completion out;
    out.sigma = sigma;
    std::set<Cell> vset(h.verts.begin(), h.verts.end());
    std::set<std::pair<Cell, Cell>> eset(h.edges.begin(), h.edges.end());

    auto edge_between = [&](Cell a, Cell b) {
        a = h.norm(a);
        b = h.norm(b);
        return eset.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    // The sigma-face holding each edge.
    std::set<Cell> cells;
    for (auto [a, b] : h.edges) {
        int di = b.i - a.i, dj = b.j - a.j;
        if (h.wi > 0) {
            di = ((di % h.wi) + h.wi) % h.wi;
            if (di != 1) di -= h.wi;
            dj = ((dj % h.wj) + h.wj) % h.wj;
            if (dj != 1) dj -= h.wj;
        }
        assert(std::abs(di) == 1 && std::abs(dj) == 1);
        Cell f1 = h.norm(Cell{a.i + di, a.j});
        Cell f2 = h.norm(Cell{a.i, a.j + dj});
        Cell f = (((f1.i % 2) + 2) % 2 == sigma) ? f1 : f2;
        assert((((f.i % 2) + 2) % 2) == sigma);
        cells.insert(f);
    }

    // Corners of a cell, counterclockwise from east.
    auto corners = [&](Cell f) {
        return std::array<Cell, 4>{h.norm(Cell{f.i + 1, f.j}), h.norm(Cell{f.i, f.j + 1}),
                                   h.norm(Cell{f.i - 1, f.j}), h.norm(Cell{f.i, f.j - 1})};
    };

    std::set<Cell> vg;
    for (Cell f : cells)
        for (Cell c : corners(f)) vg.insert(c);

    // Condition (i): H's vertices all lie on cells, and adjacent corners of a
    // cell that are both present must be joined in H.
    for (Cell v : h.verts)
        if (!vg.count(v)) {
            out.error = "not-cellularly-completable: vertex off every cell";
            return out;
        }
    for (Cell f : cells) {
        auto c = corners(f);
        for (int s = 0; s < 4; ++s) {
            Cell a = c[s], b = c[(s + 1) % 4];
            if (vset.count(a) && vset.count(b) && !edge_between(a, b)) {
                out.error = "not-cellularly-completable: cell edge missing from graph";
                return out;
            }
        }
    }

    // Maximal runs along each axis. Cells all share the same coordinate
    // parities, so runs advance in steps of two.
    auto build_paths = [&](int axis) {
        std::map<int, std::vector<int>> lines;  // fixed coord -> moving coords
        for (Cell f : cells) {
            int fixed = axis == 0 ? f.j : f.i;
            int moving = axis == 0 ? f.i : f.j;
            lines[fixed].push_back(moving);
        }
        int period = axis == 0 ? h.wi : h.wj;
        std::vector<CompletionPath> paths;
        for (auto& [fixed, moving] : lines) {
            std::sort(moving.begin(), moving.end());
            std::set<int> present(moving.begin(), moving.end());
            auto make_cell = [&](int mv) {
                return axis == 0 ? Cell{mv, fixed} : Cell{fixed, mv};
            };
            if (period > 0 && static_cast<int>(moving.size()) == period / 2) {
                CompletionPath p;
                p.axis = axis;
                p.ring = true;
                for (int mv : moving) p.cells.push_back(make_cell(mv));
                p.type = 0;
                paths.push_back(std::move(p));
                continue;
            }
            // Walk each maximal run once, starting just after a gap.
            std::set<int> seen;
            for (int mv : moving) {
                if (seen.count(mv)) continue;
                int prev = mv - 2;
                if (period > 0) prev = ((prev % period) + period) % period;
                if (present.count(prev)) continue;  // not the start of a run
                CompletionPath p;
                p.axis = axis;
                int cur = mv;
                while (true) {
                    p.cells.push_back(make_cell(cur));
                    seen.insert(cur);
                    int nxt = cur + 2;
                    if (period > 0) nxt = ((nxt % period) + period) % period;
                    if (!present.count(nxt)) break;
                    cur = nxt;
                }
                int lo = axis == 0 ? p.cells.front().i : p.cells.front().j;
                int hi = axis == 0 ? p.cells.back().i : p.cells.back().j;
                p.tip_a = h.norm(axis == 0 ? Cell{lo - 1, fixed} : Cell{fixed, lo - 1});
                p.tip_b = h.norm(axis == 0 ? Cell{hi + 1, fixed} : Cell{fixed, hi + 1});
                p.type = (vset.count(p.tip_a) ? 1 : 0) + (vset.count(p.tip_b) ? 1 : 0) - 1;
                paths.push_back(std::move(p));
            }
        }
        return paths;
    };
    for (int axis : {0, 1}) {
        out.paths[axis] = build_paths(axis);
        out.t_axis[axis] = 0;
        for (const auto& p : out.paths[axis]) out.t_axis[axis] += p.type;
    }

    // X: tip vertices from both axis partitions.
    std::set<Cell> x;
    for (int axis : {0, 1})
        for (const auto& p : out.paths[axis])
            if (!p.ring) {
                x.insert(p.tip_a);
                x.insert(p.tip_b);
            }

    // Condition (ii): corners missing from H must be extremal.
    for (Cell v : vg)
        if (!vset.count(v) && !x.count(v)) {
            out.error = "not-cellularly-completable: interior corner missing";
            return out;
        }

    // H': toggle X, keep the edges of present cells between surviving
    // vertices.
    std::set<Cell> vprime = vset;
    for (Cell v : x) {
        auto it = vprime.find(v);
        if (it != vprime.end())
            vprime.erase(it);
        else
            vprime.insert(v);
    }
    out.result.wi = h.wi;
    out.result.wj = h.wj;
    out.result.verts.assign(vprime.begin(), vprime.end());
    std::set<std::pair<Cell, Cell>> eprime;
    for (Cell f : cells) {
        auto c = corners(f);
        for (int s = 0; s < 4; ++s) {
            Cell a = c[s], b = c[(s + 1) % 4];
            if (vprime.count(a) && vprime.count(b))
                eprime.insert({std::min(a, b), std::max(a, b)});
        }
    }
    out.result.edges.assign(eprime.begin(), eprime.end());
    out.cells.assign(cells.begin(), cells.end());
    out.x_vertices.assign(x.begin(), x.end());
    out.ok = true;
    return out;
}

}  // namespace aztec
