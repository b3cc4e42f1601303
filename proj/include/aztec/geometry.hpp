#pragma once

#include <cassert>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace aztec {

// Thrown for structurally invalid inputs (bad parameters, bad placement, bad
// JSON specs). The CLI maps it to exit code 2.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an engine declines an instance (size guards). CLI exit code 3.
struct EngineRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unit square of a lattice region. Chessboard color: (x+y) mod 2, 1 = white.
struct Sq {
    int x = 0, y = 0;
    auto operator<=>(const Sq&) const = default;
};

inline int square_color(Sq s) { return ((s.x + s.y) % 2 + 2) % 2; }

// Cell of the underlying diagonal board: the same objects rotated 45 degrees.
// White board cells (i+j odd) are the squares of regions / the vertices of
// their dual graphs; black board cells (i+j even) are the faces.
struct Cell {
    int i = 0, j = 0;
    auto operator<=>(const Cell&) const = default;
};

inline bool is_vertex_cell(Cell c) { return ((c.i + c.j) % 2 + 2) % 2 == 1; }
inline bool is_face_cell(Cell c) { return !is_vertex_cell(c); }

// Vertex color on the board: 1 (white) when the row index is even.
inline int cell_color(Cell c) {
    assert(is_vertex_cell(c));
    return (c.j % 2 == 0) ? 1 : 0;
}

// Fixed affine dictionary between the two pictures. Both divisions are exact.
inline Sq to_region(Cell c) {
    assert(is_vertex_cell(c));
    return Sq{(c.i + c.j - 1) / 2, (c.j - c.i - 1) / 2};
}

inline Cell to_board(Sq s) { return Cell{s.x - s.y, s.x + s.y + 1}; }

// Board cells removed by an odd window of shape O_{k,l} centered at the board
// cell (cx, cy): offsets |di| <= l, |dj| <= k with di+dj == k+l (mod 2).
// The center parity must satisfy cx+cy == 1+k+l (mod 2) so that every listed
// cell is a vertex cell.
inline std::vector<Cell> odd_window_cells(int k, int l, int cx, int cy) {
    if (k < 0 || l < 0) throw SpecError("odd window needs k, l >= 0");
    if (((cx + cy) % 2 + 2) % 2 != ((1 + k + l) % 2 + 2) % 2)
        throw SpecError("invalid-placement: odd window center parity");
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(2 * k * l + k + l + 1));
    for (int dj = -k; dj <= k; ++dj)
        for (int di = -l; di <= l; ++di)
            if (((di + dj) % 2 + 2) % 2 == ((k + l) % 2 + 2) % 2)
                out.push_back(Cell{cx + di, cy + dj});
    assert(static_cast<int>(out.size()) == 2 * k * l + k + l + 1);
    return out;
}

// Same window as region squares, centered at doubled region coordinates
// (c2x, c2y). Requires c2x == c2y == k+l (mod 2); the square (x, y) belongs
// iff |2(x+y) - (c2x+c2y)| <= 2k and |2(x-y) - (c2x-c2y)| <= 2l.
inline std::vector<Sq> odd_window_squares(int k, int l, int c2x, int c2y) {
    if (k < 0 || l < 0) throw SpecError("odd window needs k, l >= 0");
    auto par = [](int v) { return (v % 2 + 2) % 2; };
    if (par(c2x) != par(k + l) || par(c2y) != par(k + l))
        throw SpecError("invalid-placement: odd window center parity");
    // The doubled region center maps to the board cell below.
    int cx = (c2x - c2y) / 2;
    int cy = (c2x + c2y) / 2 + 1;
    std::vector<Sq> out;
    for (Cell c : odd_window_cells(k, l, cx, cy)) out.push_back(to_region(c));
    return out;
}

// All vertex cells of the board rectangle [ilo..ihi] x [jlo..jhi], as region
// squares. Aztec rectangle regions are exactly these sets.
inline std::vector<Sq> diamond_squares(int ilo, int ihi, int jlo, int jhi) {
    std::vector<Sq> out;
    for (int j = jlo; j <= jhi; ++j)
        for (int i = ilo; i <= ihi; ++i)
            if (((i + j) % 2 + 2) % 2 == 1) out.push_back(to_region(Cell{i, j}));
    return out;
}

}  // namespace aztec
