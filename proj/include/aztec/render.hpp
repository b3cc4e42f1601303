#pragma once

#include <map>
#include <string>

#include "aztec/region.hpp"
#include "aztec/torus.hpp"

namespace aztec {

namespace detail {

inline void svg_rect(std::string& out, int x, int y, const char* fill, const char* extra = "") {
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" width=\"1\" height=\"1\" fill=\"" + fill + "\"" + extra + "/>\n";
}

inline std::string svg_open(int minx, int miny, int w, int h) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += std::to_string(minx) + " " + std::to_string(miny) + " " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
    return s;
}

}  // namespace detail

// Renders the region's squares on the unit grid, with the lattice boundary
// stroked and any gaps inside row spans (the holes) filled in an accent color.
inline std::string render_region(const Region& r) {
    if (r.squares.empty()) return detail::svg_open(0, 0, 1, 1) + "</svg>\n";
    int minx = r.squares[0].x, maxx = minx, miny = r.squares[0].y, maxy = r.squares[0].y;
    for (Sq s : r.squares) {
        minx = std::min(minx, s.x);
        maxx = std::max(maxx, s.x);
        miny = std::min(miny, s.y);
        maxy = std::max(maxy, s.y);
    }
    // Screen y grows downward; flip so larger lattice y is higher.
    auto px = [&](int x) { return x - minx + 1; };
    auto py = [&](int y) { return maxy - y + 1; };

    std::string out = detail::svg_open(0, 0, maxx - minx + 3, maxy - miny + 3);
    std::map<int, std::pair<int, int>> rows;  // y -> [min x, max x]
    for (Sq s : r.squares) {
        auto it = rows.find(s.y);
        if (it == rows.end())
            rows[s.y] = {s.x, s.x};
        else {
            it->second.first = std::min(it->second.first, s.x);
            it->second.second = std::max(it->second.second, s.x);
        }
    }
    for (Sq s : r.squares)
        detail::svg_rect(out, px(s.x), py(s.y), square_color(s) == 1 ? "#f7f3e8" : "#cbbd97",
                         " stroke=\"#8a8272\" stroke-width=\"0.03\"");
    for (const auto& [y, span] : rows)
        for (int x = span.first; x <= span.second; ++x)
            if (!r.contains(Sq{x, y})) detail::svg_rect(out, px(x), py(y), "#b24a3b");

    // Stroke the outer boundary: every square side not shared with a neighbor.
    std::string path;
    for (Sq s : r.squares) {
        int X = px(s.x), Y = py(s.y);
        if (!r.contains(Sq{s.x, s.y + 1}))
            path += "M" + std::to_string(X) + " " + std::to_string(Y) + "h1";
        if (!r.contains(Sq{s.x, s.y - 1}))
            path += "M" + std::to_string(X) + " " + std::to_string(Y + 1) + "h1";
        if (!r.contains(Sq{s.x - 1, s.y}))
            path += "M" + std::to_string(X) + " " + std::to_string(Y) + "v1";
        if (!r.contains(Sq{s.x + 1, s.y}))
            path += "M" + std::to_string(X + 1) + " " + std::to_string(Y) + "v1";
    }
    out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#2b2b2b\" stroke-width=\"0.1\" "
           "stroke-linecap=\"square\"/>\n";
    out += "</svg>\n";
    return out;
}

// Renders one fundamental domain of the torus: vertex cells as squares, hole
// cells in accent, deleted edges as crossed diagonal segments.
inline std::string render_torus(const TorusGraph& g) {
    int w = 2 * g.n, h = 2 * g.m;
    auto py = [&](int j) { return h - 1 - j + 1; };
    std::string out = detail::svg_open(0, 0, w + 2, h + 2);
    out += "<rect x=\"1\" y=\"1\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) +
           "\" fill=\"none\" stroke=\"#777\" stroke-width=\"0.06\" stroke-dasharray=\"0.3 0.2\"/>\n";
    for (Cell c : g.verts)
        detail::svg_rect(out, c.i + 1, py(c.j), cell_color(c) == 1 ? "#f7f3e8" : "#cbbd97",
                         " stroke=\"#8a8272\" stroke-width=\"0.03\"");
    for (const TorusHole& hole : g.holes)
        for (Cell c : torus_hole_cells(g, hole)) detail::svg_rect(out, c.i + 1, py(c.j), "#b24a3b");
    for (const TorusSep& s : g.seps) {
        // The cut line through the split anchor, drawn across its cell.
        Cell a = g.norm(Cell{s.x, s.y});
        std::string cx = std::to_string(a.i + 1) + ".5";
        std::string cy = std::to_string(py(a.j) - 1) + ".5";
        std::string x1 = cx, y1 = cy, x2 = cx, y2 = cy;
        if (s.axis == 0) {
            y1 = std::to_string(py(a.j) - 1) + ".1";
            y2 = std::to_string(py(a.j) - 1) + ".9";
        } else {
            x1 = std::to_string(a.i + 1) + ".1";
            x2 = std::to_string(a.i + 1) + ".9";
        }
        out += "<line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 +
               "\" stroke=\"#b24a3b\" stroke-width=\"0.12\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace aztec
