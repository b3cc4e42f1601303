#pragma once

#include <variant>

#include "aztec/bigint.hpp"
#include "aztec/graph.hpp"
#include "aztec/torus.hpp"

namespace aztec {

// M(AD_n) = 2^(n(n+1)/2).
inline Int aztec_diamond_count(int n) {
    if (n < 0) throw SpecError("diamond order must be nonnegative");
    return pow2_int(static_cast<unsigned long>(n) * (n + 1) / 2);
}

// Closed-form matching counts for the four lattice families, as products over
// the kept label set T (sorted ascending, 1-indexed as t_1 < t_2 < ...).
// Empty products are 1 and every division is exact.
inline Int count_r_formula(RVariant v, int m, int n, std::vector<int> kept) {
    kept = validate_r_params(v, m, n, std::move(kept));
    auto t = [&](int i) { return Int(kept[i - 1]); };  // 1-indexed
    Int num = 1, den = 1;
    switch (v) {
        case RVariant::wide_even: {
            // 2^(m(m+4)/4) * prod_{i<j<=m/2} (t_{2j-1}-t_{2i-1})(t_{2j}-t_{2i})
            //             / (0! 1! ... (m/2-1)!)^2
            int h = m / 2;
            num = pow2_int(static_cast<unsigned long>(m) * (m + 4) / 4);
            for (int i = 1; i <= h; ++i)
                for (int j = i + 1; j <= h; ++j)
                    num *= (t(2 * j - 1) - t(2 * i - 1)) * (t(2 * j) - t(2 * i));
            for (int i = 0; i < h; ++i) den *= factorial(i) * factorial(i);
            break;
        }
        case RVariant::wide_odd: {
            // 2^((m^2+4m-1)/4) * prod_{i<j<=(m-1)/2} (t_{2j}-t_{2i})
            //   * prod_{i<j<=(m+1)/2} (t_{2j-1}-t_{2i-1})
            //   / (prod_{i=1}^{(m-1)/2} (i-1)! * prod_{i=1}^{(m+1)/2} (i-1)!)
            int lo = (m - 1) / 2, hi = (m + 1) / 2;
            num = pow2_int(static_cast<unsigned long>(m * m + 4 * m - 1) / 4);
            for (int i = 1; i <= lo; ++i)
                for (int j = i + 1; j <= lo; ++j) num *= t(2 * j) - t(2 * i);
            for (int i = 1; i <= hi; ++i)
                for (int j = i + 1; j <= hi; ++j) num *= t(2 * j - 1) - t(2 * i - 1);
            for (int i = 1; i <= lo; ++i) den *= factorial(i - 1);
            for (int i = 1; i <= hi; ++i) den *= factorial(i - 1);
            break;
        }
        case RVariant::tall_odd: {
            // 2^(((m-1)/2)^2 + n) * prod_{i=(m+3)/2}^{n+1} ((i-1)!)^2
            //   * prod_{i<j<=n-(m-1)/2} (t_{2j}-t_{2i})(t_{2j-1}-t_{2i-1})
            //   / prod_i (t_i-1)! (n+1-t_i)!
            int h = n - (m - 1) / 2;
            long half = (m - 1) / 2;
            num = pow2_int(static_cast<unsigned long>(half * half + n));
            for (int i = (m + 3) / 2; i <= n + 1; ++i)
                num *= factorial(i - 1) * factorial(i - 1);
            for (int i = 1; i <= h; ++i)
                for (int j = i + 1; j <= h; ++j)
                    num *= (t(2 * j) - t(2 * i)) * (t(2 * j - 1) - t(2 * i - 1));
            for (int tv : kept)
                den *= factorial(tv - 1) * factorial(n + 1 - tv);
            break;
        }
        case RVariant::tall_even: {
            // 2^(m(m-2)/4 + n) * prod_{i=m/2+1}^{n+1} (i-1)!
            //   * prod_{i=m/2+2}^{n+1} (i-1)!
            //   * prod_{i<j<=n-m/2} (t_{2j}-t_{2i})
            //   * prod_{i<j<=n-m/2+1} (t_{2j-1}-t_{2i-1})
            //   / prod_i (t_i-1)! (n+1-t_i)!
            int lo = n - m / 2, hi = n - m / 2 + 1;
            num = pow2_int(static_cast<unsigned long>(m) * (m - 2) / 4 + n);
            for (int i = m / 2 + 1; i <= n + 1; ++i) num *= factorial(i - 1);
            for (int i = m / 2 + 2; i <= n + 1; ++i) num *= factorial(i - 1);
            for (int i = 1; i <= lo; ++i)
                for (int j = i + 1; j <= lo; ++j) num *= t(2 * j) - t(2 * i);
            for (int i = 1; i <= hi; ++i)
                for (int j = i + 1; j <= hi; ++j) num *= t(2 * j - 1) - t(2 * i - 1);
            for (int tv : kept)
                den *= factorial(tv - 1) * factorial(n + 1 - tv);
            break;
        }
    }
    return div_exact(num, den);
}

// Flank exponent of a hole under one shaded evolution step. The shading
// whose faces sit in even columns (sigma 0) steps white holes taller and
// black holes wider; the odd-column shading swaps the two roles. `placement`
// is the hole's current majority color (1 white, 0 black).
inline int flank_exponent(int k, int l, int placement, int sigma = 0) {
    (void)k;
    int active = sigma == 0 ? 1 : 0;
    return placement == active ? l : -(l + 1);
}

// Equivalent bookkeeping that charges the other flank; the totals agree with
// flank_exponent on any zero-charge collection.
inline int flank_exponent_alt(int k, int l, int placement, int sigma = 0) {
    (void)l;
    int active = sigma == 0 ? 1 : 0;
    return placement == active ? -(k + 1) : k;
}

// One evolution step of a hole: the active color grows taller, the other
// grows wider, and a slit that cannot shrink further resolves into one
// separation per slit cell. Separation anchors keep the slit's own cells,
// and the cut axis is fixed by the degenerating side: a slit of the active
// color runs (and cuts) vertically, one of the inactive color horizontally.
// For monomers the run is a single cell, so the side alone decides the axis.
using EvolvedHole = std::variant<TorusHole, std::vector<TorusSep>>;

inline std::vector<TorusSep> hole_multiplet(const TorusHole& h, bool active_side) {
    assert(active_side ? h.l == 0 : h.k == 0);
    std::vector<TorusSep> seps;
    int len = h.k + h.l + 1;
    int axis = active_side ? 0 : 1;
    for (int d = -(len - 1); d <= len - 1; d += 2) {
        if (active_side)
            seps.push_back(TorusSep{axis, h.cx, h.cy + d});
        else
            seps.push_back(TorusSep{axis, h.cx + d, h.cy});
    }
    return seps;
}

inline EvolvedHole evolved_form(const TorusHole& h, int sigma = 0) {
    int active = sigma == 0 ? 1 : 0;
    if (h.placement == active) {
        if (h.l == 0) return hole_multiplet(h, true);
        return TorusHole{h.k + 1, h.l - 1, h.cx, h.cy, 1 - h.placement};
    }
    if (h.k == 0) return hole_multiplet(h, false);
    return TorusHole{h.k - 1, h.l + 1, h.cx, h.cy, 1 - h.placement};
}

// The lattice families admit window insertions whose counts reduce to the
// closed forms above. Window i spans a_i+1 consecutive labels centered at
// c_i (stored doubled as c2 = 2 c_i).
struct WindowSpec {
    int a = 0;
    int c2 = 0;
    auto operator<=>(const WindowSpec&) const = default;
};

enum class Family { wide_even, wide_odd, tall_odd, tall_even };

inline RVariant family_variant(Family f) {
    switch (f) {
        case Family::wide_even: return RVariant::wide_even;
        case Family::wide_odd: return RVariant::wide_odd;
        case Family::tall_odd: return RVariant::tall_odd;
        case Family::tall_even: return RVariant::tall_even;
    }
    return RVariant::wide_even;
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::wide_even: return "AR";
        case Family::wide_odd: return "AR'";
        case Family::tall_odd: return "AR''";
        case Family::tall_even: return "AR'''";
    }
    return "?";
}

inline bool family_is_wide(Family f) {
    return f == Family::wide_even || f == Family::wide_odd;
}

// Total label width consumed by the windows.
inline int window_label_width(const std::vector<WindowSpec>& holes) {
    int a = 0;
    for (const auto& h : holes) a += h.a + 1;
    return a;
}

// Labels covered by window i: the a_i+1 integers centered at c2/2.
inline std::pair<int, int> window_label_run(const WindowSpec& h) {
    if (((h.c2 - h.a) % 2 + 2) % 2 != 0)
        throw SpecError("invalid-placement: window center parity (2c == a mod 2)");
    int lo = (h.c2 - h.a) / 2, hi = (h.c2 + h.a) / 2;
    return {lo, hi};
}

// Kept label set of a windowed family instance: all labels outside the runs.
inline std::vector<int> window_kept_labels(Family f, int m, const std::vector<WindowSpec>& holes) {
    int a = window_label_width(holes);
    bool wide = family_is_wide(f);
    int n = wide ? m + a : m - a;
    if (!wide && n < 1) throw SpecError("windows too wide for the frame");
    int top = wide ? n : n + 1;
    std::vector<char> cut(top + 1, 0);
    int prev_hi = 0;
    for (const auto& h : holes) {
        auto [lo, hi] = window_label_run(h);
        if (lo <= prev_hi)
            throw SpecError("invalid-placement: window runs must be disjoint and ordered");
        if (lo < 1 || hi > top)
            throw SpecError("invalid-placement: window run outside label range");
        // Wide frames require interior runs: a run flush against either end
        // of the label range changes the count relation and is rejected.
        if (wide && (lo < 2 || hi > top - 1))
            throw SpecError("invalid-placement: window run flush with frame corner");
        for (int t = lo; t <= hi; ++t) cut[t] = 1;
        prev_hi = hi;
    }
    std::vector<int> kept;
    for (int t = 1; t <= top; ++t)
        if (!cut[t]) kept.push_back(t);
    return kept;
}

// Power of 2 relating a windowed region to its closed-form family instance:
// M(region) = 2^e M(family).
inline long window_exponent(Family f, int m, int k, int s) {
    long tri = static_cast<long>(k) * (k + 1) / 2;
    if (family_is_wide(f)) return tri * (s + 1) + static_cast<long>(k) * m;
    return tri * (s + 1) - static_cast<long>(k) * (m + 1);
}

// Predicted matching count of a windowed region, via the closed form of its
// underlying family.
inline Int predicted_windowed_count(Family f, int m, int k, const std::vector<WindowSpec>& holes) {
    if (holes.empty()) throw SpecError("windowed family needs at least one window");
    int a = window_label_width(holes);
    int n = family_is_wide(f) ? m + a : m - a;
    auto kept = window_kept_labels(f, m, holes);
    Int base = count_r_formula(family_variant(f), m, n, kept);
    long e = window_exponent(f, m, k, static_cast<int>(holes.size()));
    if (e >= 0) return base * pow2_int(static_cast<unsigned long>(e));
    return div_exact(base, pow2_int(static_cast<unsigned long>(-e)));
}

}  // namespace aztec
