#pragma once

#include <cstdint>

#include "aztec/bigint.hpp"
#include "aztec/determinant.hpp"
#include "aztec/graph.hpp"

namespace aztec {
namespace detail {

// Dense GF(2) linear system A x = b, rows packed in 64-bit words.
struct Gf2System {
    int nvars = 0;
    int words = 0;
    std::vector<std::vector<uint64_t>> rows;  // last bit slot is the rhs
    std::vector<uint8_t> rhs;

    explicit Gf2System(int vars) : nvars(vars), words((vars + 63) / 64) {}
    void add_row(const std::vector<int>& vars_on, int b) {
        std::vector<uint64_t> row(words, 0);
        for (int v : vars_on) row[v / 64] ^= 1ull << (v % 64);
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<uint8_t>(b));
    }
    // Returns any solution; the system must be consistent.
    std::vector<uint8_t> solve() {
        int nrows = static_cast<int>(rows.size());
        std::vector<int> pivot_of_row(nrows, -1);
        int rank = 0;
        for (int col = 0; col < nvars && rank < nrows; ++col) {
            int sel = -1;
            for (int r = rank; r < nrows; ++r)
                if ((rows[r][col / 64] >> (col % 64)) & 1) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(rows[sel], rows[rank]);
            std::swap(rhs[sel], rhs[rank]);
            for (int r = 0; r < nrows; ++r) {
                if (r == rank) continue;
                if ((rows[r][col / 64] >> (col % 64)) & 1) {
                    for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
                    rhs[r] ^= rhs[rank];
                }
            }
            pivot_of_row[rank] = col;
            ++rank;
        }
        for (int r = rank; r < nrows; ++r)
            if (rhs[r]) throw std::logic_error("inconsistent orientation system");
        std::vector<uint8_t> x(nvars, 0);
        for (int r = 0; r < rank; ++r) x[pivot_of_row[r]] = rhs[r];
        return x;
    }
};

// Combinatorial faces of a straight-line plane graph with axis-parallel unit
// edges. Directions are indexed counterclockwise: E, N, W, S.
struct PlanarFaces {
    // Each face is a closed walk of directed half-edges (edge id, forward?),
    // where forward means traversal from the stored edge's u to v.
    struct Face {
        std::vector<std::pair<int, bool>> walk;
        long long doubled_area = 0;
        int component = 0;
    };
    std::vector<Face> faces;
    std::vector<int> vertex_component;
    int components = 0;
};

inline int dir_code(Sq from, Sq to) {
    int dx = to.x - from.x, dy = to.y - from.y;
    if (dx == 1 && dy == 0) return 0;
    if (dx == 0 && dy == 1) return 1;
    if (dx == -1 && dy == 0) return 2;
    if (dx == 0 && dy == -1) return 3;
    assert(false && "non-unit edge");
    return -1;
}

inline PlanarFaces trace_faces(const MatchGraph& g) {
    int nv = g.size();
    // Neighbor lists sorted counterclockwise, with the edge id of each arc.
    std::vector<std::vector<std::pair<int, int>>> rot(nv);  // (dir, edge id)
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        rot[u].emplace_back(dir_code(g.verts[u], g.verts[v]), e);
        rot[v].emplace_back(dir_code(g.verts[v], g.verts[u]), e);
    }
    for (auto& r : rot) std::sort(r.begin(), r.end());

    PlanarFaces out;
    out.vertex_component.assign(nv, -1);
    for (int s = 0; s < nv; ++s) {
        if (out.vertex_component[s] != -1) continue;
        int c = out.components++;
        std::vector<int> stack{s};
        out.vertex_component[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [d, e] : rot[v]) {
                int u = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (out.vertex_component[u] == -1) {
                    out.vertex_component[u] = c;
                    stack.push_back(u);
                }
            }
        }
    }

    // A half-edge is (edge id, forward flag). The successor of arriving at v
    // along h is the arc out of v whose reversed direction follows h's entry
    // direction in counterclockwise order.
    auto half_id = [](int e, bool fwd) { return 2 * e + (fwd ? 1 : 0); };
    std::vector<char> used(2 * g.edges.size(), 0);
    for (int e0 = 0; e0 < static_cast<int>(g.edges.size()); ++e0)
        for (bool fwd0 : {true, false}) {
            if (used[half_id(e0, fwd0)]) continue;
            PlanarFaces::Face f;
            int e = e0;
            bool fwd = fwd0;
            do {
                used[half_id(e, fwd)] = 1;
                f.walk.emplace_back(e, fwd);
                int from = fwd ? g.edges[e].first : g.edges[e].second;
                int to = fwd ? g.edges[e].second : g.edges[e].first;
                Sq a = g.verts[from], b = g.verts[to];
                f.doubled_area += static_cast<long long>(a.x) * b.y -
                                  static_cast<long long>(b.x) * a.y;
                // Direction back toward `from`, then the next arc counterclockwise.
                int back = dir_code(g.verts[to], g.verts[from]);
                const auto& arcs = rot[to];
                int idx = -1;
                for (int t = 0; t < static_cast<int>(arcs.size()); ++t)
                    if (arcs[t].first == back) idx = t;
                assert(idx >= 0);
                auto [d2, e2] = arcs[(idx + 1) % arcs.size()];
                f.component = out.vertex_component[to];
                fwd = g.edges[e2].first == to;
                e = e2;
            } while (!used[half_id(e, fwd)]);
            out.faces.push_back(std::move(f));
        }
    return out;
}

}  // namespace detail

// Orients the edges of a plane bipartite graph so that every bounded face
// has an odd number of edges agreeing with its counterclockwise boundary
// walk. Returns one sign per edge: +1 keeps the white-to-black direction.
inline std::vector<int> planar_edge_signs(const MatchGraph& g) {
    auto pf = detail::trace_faces(g);

    // Euler check per component that has at least one edge.
    std::vector<int> vcnt(pf.components, 0), ecnt(pf.components, 0), fcnt(pf.components, 0);
    for (int v = 0; v < g.size(); ++v) ++vcnt[pf.vertex_component[v]];
    for (auto [u, v] : g.edges) ++ecnt[pf.vertex_component[u]];
    for (const auto& f : pf.faces) ++fcnt[f.component];
    std::vector<int> outer(pf.components, -1);
    for (int fi = 0; fi < static_cast<int>(pf.faces.size()); ++fi) {
        const auto& f = pf.faces[fi];
        if (f.doubled_area <= 0) {
            assert(outer[f.component] == -1 && "one outer face per component");
            outer[f.component] = fi;
        }
    }
    for (int c = 0; c < pf.components; ++c) {
        if (ecnt[c] == 0) continue;
        assert(vcnt[c] - ecnt[c] + fcnt[c] == 2);
        assert(outer[c] >= 0);
    }

    detail::Gf2System sys(static_cast<int>(g.edges.size()));
    for (int fi = 0; fi < static_cast<int>(pf.faces.size()); ++fi) {
        const auto& f = pf.faces[fi];
        if (outer[f.component] == fi) continue;
        // Walking forward along a stored edge means leaving its u endpoint;
        // the base orientation points white to black.
        std::vector<int> vars;
        int agree = 0;
        for (auto [e, fwd] : f.walk) {
            vars.push_back(e);
            int from = fwd ? g.edges[e].first : g.edges[e].second;
            if (g.color(from) == 1) agree ^= 1;
        }
        // Edges traversed twice by the same face cancel out of the row.
        sys.add_row(vars, 1 ^ agree);
    }
    auto flip = sys.solve();
    std::vector<int> sign(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) sign[e] = flip[e] ? -1 : 1;
    return sign;
}

// Exact perfect matching count of a plane bipartite graph via a signed
// biadjacency determinant.
inline Int count_matchings_planar(const MatchGraph& g) {
    if (g.size() == 0) return 1;
    std::vector<int> wid(g.size(), -1), bid(g.size(), -1);
    int nw = 0, nb = 0;
    for (int v = 0; v < g.size(); ++v)
        (g.color(v) == 1 ? wid[v] : bid[v]) = g.color(v) == 1 ? nw++ : nb++;
    if (nw != nb) return 0;
    auto sign = planar_edge_signs(g);
    IntMatrix B(nw);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        int w = g.color(u) == 1 ? u : v;
        int b = g.color(u) == 1 ? v : u;
        B.at(wid[w], bid[b]) = sign[e];
    }
    Int d = exact_determinant(B);
    return d >= 0 ? d : Int(-d);
}

}  // namespace aztec
