#pragma once

#include "aztec/complement.hpp"
#include "aztec/formulas.hpp"

namespace aztec {

// Board-coordinate center of a window's deleted run. Wide frames delete odd
// label columns, tall frames even ones; the row is the frame's deletion row.
inline Cell window_center_board(Family f, int m, const WindowSpec& h) {
    int row = (f == Family::wide_even || f == Family::tall_odd) ? m : m - 1;
    int col = family_is_wide(f) ? h.c2 - 1 : h.c2 - 2;
    return Cell{col, row};
}

// Region squares removed by one window at order k.
inline std::vector<Sq> window_squares(Family f, int m, int k, const WindowSpec& h) {
    if (k > h.a) throw SpecError("invalid-placement: window order exceeds window width");
    Cell c = window_center_board(f, m, h);
    std::vector<Sq> out;
    for (Cell w : odd_window_cells(k, h.a - k, c.i, c.j)) out.push_back(to_region(w));
    return out;
}

// Windowed region of order k: the grown (wide) or shrunk (tall) diamond with
// one odd window per deleted run.
inline Region build_windowed_region(Family f, int m, int k, const std::vector<WindowSpec>& holes) {
    if (m < 1) throw SpecError("frame order must be positive");
    if (k < 1) throw SpecError("window order must be at least 1");
    if (holes.empty()) throw SpecError("windowed family needs at least one window");
    for (const auto& h : holes)
        if (h.a < 1) throw SpecError("window width must be at least 1");
    window_kept_labels(f, m, holes);  // validates the runs
    int a = window_label_width(holes);
    bool wide = family_is_wide(f);
    int n = wide ? m + a : m - a;
    int ilo = wide ? -k : k, ihi = wide ? 2 * n + k : 2 * n - k;
    int jlo = wide ? -k : k, jhi = wide ? 2 * m + k : 2 * m - k;
    if (ilo >= ihi || jlo >= jhi) throw SpecError("window order too large for the frame");
    Region outer = make_region(diamond_squares(ilo, ihi, jlo, jhi));
    std::vector<Sq> removed;
    for (const auto& h : holes)
        for (Sq s : window_squares(f, m, k, h)) removed.push_back(s);
    return region_minus(outer, removed);
}

// Step-by-step construction of a windowed region from its frame. Each step
// re-expresses the matching count through the complementary graph, so
// M(final) = 2^exponent M(frame). The steps need every pair of consecutive
// runs separated by a kept label. Flush runs are allowed on the odd tall
// frame, where an end window may be narrower than the order k; its arm then
// protrudes through the boundary and the result is cruciform rather than a
// diamond with windows.
struct WindowedEvolution {
    Family family = Family::wide_even;
    int m = 0, k = 0;
    std::vector<WindowSpec> holes;
    std::vector<int> kept;
    bool cruciform = false;
    std::vector<long> step_t;  // completion exponent of each step
    long exponent = 0;         // M(final) = 2^exponent M(frame)
    BoardGraph final_board;
    Region region;
};

inline WindowedEvolution evolve_windowed(Family f, int m, int k,
                                         const std::vector<WindowSpec>& holes) {
    WindowedEvolution ev;
    ev.family = f;
    ev.m = m;
    ev.k = k;
    ev.holes = holes;
    if (m < 1) throw SpecError("frame order must be positive");
    if (k < 1) throw SpecError("window order must be at least 1");
    if (holes.empty()) throw SpecError("windowed family needs at least one window");
    for (const auto& h : holes)
        if (h.a < 1) throw SpecError("window width must be at least 1");
    ev.kept = window_kept_labels(f, m, holes);
    int a = window_label_width(holes);
    int s = static_cast<int>(holes.size());
    bool wide = family_is_wide(f);
    int n = wide ? m + a : m - a;
    int top = wide ? n : n + 1;

    int prev_hi = -1;
    int min_a = holes.front().a;
    for (int i = 0; i < s; ++i) {
        auto [lo, hi] = window_label_run(holes[i]);
        if (prev_hi >= 0 && lo == prev_hi + 1)
            throw SpecError("invalid-placement: window runs must be separated for the step construction");
        prev_hi = hi;
        min_a = std::min(min_a, holes[i].a);
        if (k <= holes[i].a) continue;
        // An arm taller than its run only works on the tall frames, flush
        // against the label range, where it protrudes through the boundary.
        bool flush = (i == 0 && lo == 1) || (i == s - 1 && hi == top);
        if (wide || !flush)
            throw SpecError("invalid-placement: window order exceeds window width");
        ev.cruciform = true;
    }
    if (!wide && 2 * k > (f == Family::tall_odd ? m : m - 1))
        throw SpecError("window order too large for the frame");

    int del_row = (f == Family::wide_even || f == Family::tall_odd) ? m : m - 1;
    BoardGraph h = board_from_match(build_r_graph(family_variant(f), m, n, ev.kept));
    for (int j = 1; j <= k; ++j) {
        int sigma = ((del_row + j - 1) % 2 + 2) % 2;
        Completion c = cellular_complement(h, sigma);
        if (!c.ok) throw SpecError(c.error);
        assert(c.t_axis[0] == c.t_axis[1]);
        long expect = wide ? -static_cast<long>(m) - static_cast<long>(j) * (s + 1)
                           : static_cast<long>(m + 1) - static_cast<long>(j) * (s + 1);
        assert(c.t_axis[0] == expect);
        (void)expect;
        ev.step_t.push_back(c.t_axis[0]);
        h = std::move(c.result);
        if (j <= min_a) {
            BoardGraph direct = board_from_match(dual_graph(build_windowed_region(f, m, j, holes)));
            assert(h.verts == direct.verts);
            assert(h.edges == direct.edges);
        }
    }
    for (long t : ev.step_t) ev.exponent -= t;
    assert(ev.exponent == window_exponent(f, m, k, s));

    // The steps only ever hand back grid-induced graphs; the final one is a
    // genuine region.
    MatchGraph mg = match_from_board(h);
    Region r = make_region(mg.verts);
    MatchGraph induced = dual_graph(r);
    assert(mg.edges == induced.edges);
    (void)induced;
    ev.final_board = std::move(h);
    ev.region = std::move(r);
    return ev;
}

// Cruciform region: the odd tall frame with flush end runs evolved past
// their width, so the arms protrude through the diamond boundary.
inline Region build_cruciform_region(int m, int k, const std::vector<WindowSpec>& holes) {
    WindowedEvolution ev = evolve_windowed(Family::tall_odd, m, k, holes);
    return ev.region;
}

// Region of a windowed instance, by the direct construction when every
// window is at least as wide as the order, else by the step construction.
inline Region windowed_region(Family f, int m, int k, const std::vector<WindowSpec>& holes) {
    bool protruding = false;
    for (const auto& h : holes) protruding = protruding || k > h.a;
    if (!protruding) return build_windowed_region(f, m, k, holes);
    return evolve_windowed(f, m, k, holes).region;
}

// One shaded completion step on a torus. Holes step per evolved_form; when
// no hole degenerates into separations (and none are present already), the
// cellular machinery applies and both results are cross-checked.
struct TorusStep {
    TorusGraph evolved;
    long exponent = 0;  // M(input) = 2^exponent M(evolved)
    bool machinery = false;
    long machinery_t[2] = {0, 0};
};

inline TorusStep evolve_torus_step(const TorusGraph& g, int sigma = 0) {
    if (!g.seps.empty()) throw SpecError("separations do not evolve further");
    TorusStep out;
    std::vector<TorusHole> new_holes;
    std::vector<TorusSep> new_seps;
    bool degenerate = false;
    for (const TorusHole& h : g.holes) {
        out.exponent += flank_exponent(h.k, h.l, h.placement, sigma);
        EvolvedHole e = evolved_form(h, sigma);
        if (std::holds_alternative<TorusHole>(e)) {
            new_holes.push_back(std::get<TorusHole>(e));
        } else {
            degenerate = true;
            for (const TorusSep& sp : std::get<std::vector<TorusSep>>(e)) new_seps.push_back(sp);
        }
    }
    out.evolved = build_torus(g.m, g.n, new_holes, new_seps);
    if (!degenerate) {
        Completion c = cellular_complement(board_from_torus(g), sigma);
        if (!c.ok) throw SpecError(c.error);
        out.machinery = true;
        out.machinery_t[0] = c.t_axis[0];
        out.machinery_t[1] = c.t_axis[1];
        int charge = 0;
        for (const Cell& v : g.verts) charge += cell_color(v) == 1 ? 1 : -1;
        if (charge == 0 && !c.cells.empty()) {
            assert(c.t_axis[0] == c.t_axis[1]);
            assert(c.t_axis[0] == out.exponent);
        }
        BoardGraph direct = board_from_torus(out.evolved);
        assert(c.result.verts == direct.verts);
        assert(c.result.edges == direct.edges);
    }
    return out;
}

}  // namespace aztec
