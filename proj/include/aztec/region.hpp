#pragma once

#include <algorithm>
#include <map>
#include <set>

#include "aztec/geometry.hpp"

namespace aztec {

// A finite set of unit squares, kept sorted and duplicate-free.
struct Region {
    std::vector<Sq> squares;

    void normalize() {
        std::sort(squares.begin(), squares.end());
        squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    }
    bool contains(Sq s) const {
        return std::binary_search(squares.begin(), squares.end(), s);
    }
    int size() const { return static_cast<int>(squares.size()); }
    // #white - #black
    int balance() const {
        int b = 0;
        for (Sq s : squares) b += square_color(s) ? 1 : -1;
        return b;
    }
};

inline Region make_region(std::vector<Sq> squares) {
    Region r{std::move(squares)};
    r.normalize();
    return r;
}

// Removes `squares` from `r`; every removed square must be present.
inline Region region_minus(const Region& r, const std::vector<Sq>& squares) {
    std::set<Sq> gone(squares.begin(), squares.end());
    if (gone.size() != squares.size())
        throw SpecError("invalid-placement: window squares overlap");
    Region out;
    out.squares.reserve(r.squares.size());
    for (Sq s : r.squares) {
        auto it = gone.find(s);
        if (it != gone.end())
            gone.erase(it);
        else
            out.squares.push_back(s);
    }
    if (!gone.empty())
        throw SpecError("invalid-placement: window square outside region");
    return out;
}

// Aztec rectangle AD_{m,n} in standard position: all squares with
// -1 <= x+y <= 2m-1 and 0 <= x-y <= 2n. It has 2mn+m+n squares and its board
// picture is the vertex cells of [0..2n] x [0..2m].
inline Region build_aztec_rectangle(int m, int n) {
    if (m < 1 || n < 1) throw SpecError("aztec rectangle needs m, n >= 1");
    Region r = make_region(diamond_squares(0, 2 * n, 0, 2 * m));
    assert(r.size() == 2 * m * n + m + n);
    return r;
}

inline Region build_aztec_diamond(int n) { return build_aztec_rectangle(n, n); }

// The odd region O_{k,l} as a standalone region. `majority` (1 white,
// 0 black) is redundant with the center parity and is validated against it:
// the majority color is the color of the (k+1)(l+1) squares in rows of the
// longer direction.
inline Region build_odd_aztec_rectangle(int k, int l, int c2x, int c2y, int majority) {
    auto squares = odd_window_squares(k, l, c2x, c2y);
    int white = 0;
    for (Sq s : squares) white += square_color(s);
    int black = static_cast<int>(squares.size()) - white;
    int maj = white >= black ? 1 : 0;
    assert(std::max(white, black) == (k + 1) * (l + 1));
    if (majority != maj)
        throw SpecError("invalid-placement: majority color disagrees with center");
    return make_region(std::move(squares));
}

// Majority color that an odd window has at the given center, without
// building it: the board rows carrying the majority are j == cy+k (mod 2),
// and board color is 1 exactly on even rows.
inline int odd_window_majority(int k, int l, int c2x, int c2y) {
    (void)l;
    int cy = (c2x + c2y) / 2 + 1;
    return ((cy + k) % 2 + 2) % 2 == 0 ? 1 : 0;
}

// Net charge carried by an odd window: +(k+l+1) when the majority is white.
inline int odd_window_charge(int k, int l, int majority) {
    return majority == 1 ? (k + l + 1) : -(k + l + 1);
}

}  // namespace aztec
