#include <catch2/catch_amalgamated.hpp>

#include "aztec/engine.hpp"
#include "aztec/formulas.hpp"

using namespace aztec;

TEST_CASE("diamond count power law") {
    CHECK(aztec_diamond_count(0) == 1);
    CHECK(aztec_diamond_count(1) == 2);
    CHECK(aztec_diamond_count(3) == 64);
    CHECK(aztec_diamond_count(8) == Int(1) << 36);
}

TEST_CASE("closed-form anchors") {
    CHECK(count_r_formula(RVariant::wide_even, 4, 7, {1, 4, 5, 7}) == 3072);
    CHECK(count_r_formula(RVariant::tall_odd, 5, 3, {2, 4}) == 384);
    CHECK(count_r_formula(RVariant::tall_even, 6, 3, {2}) == 1536);
    CHECK(count_r_formula(RVariant::wide_odd, 1, 4, {3}) == 2);

    // Height-two wide frames count 8 regardless of the kept pair.
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 5; ++b)
            CHECK(count_r_formula(RVariant::wide_even, 2, 5, {a, b}) == 8);

    // A tall frame with an empty kept set follows a pure power law.
    for (int n = 1; n <= 4; ++n)
        CHECK(count_r_formula(RVariant::tall_odd, 2 * n + 1, n, {}) ==
              Int(1) << (n * n + n));
}

TEST_CASE("closed forms match engine counts on a small grid") {
    for (RVariant v : {RVariant::wide_even, RVariant::wide_odd}) {
        for (int m = 1; m <= 3; ++m)
            for (int n = m + 1; n <= 5; ++n) {
                if (m % 2 != (v == RVariant::wide_even ? 0 : 1)) continue;
                int labels = r_label_count(v, n);
                for (int mask = 0; mask < (1 << labels); ++mask) {
                    if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
                    std::vector<int> kept;
                    for (int t = 0; t < labels; ++t)
                        if (mask >> t & 1) kept.push_back(t + 1);
                    Int formula = count_r_formula(v, m, n, kept);
                    CHECK(formula == count_region(build_r_region(v, m, n, kept)));
                }
            }
    }
    for (RVariant v : {RVariant::tall_odd, RVariant::tall_even}) {
        for (int m = 2; m <= 5; ++m)
            for (int n = 1; n < m; ++n) {
                if (m % 2 != (v == RVariant::tall_even ? 0 : 1)) continue;
                int want = r_kept_count(v, m, n);
                int labels = r_label_count(v, n);
                if (want < 0 || want > labels) continue;
                for (int mask = 0; mask < (1 << labels); ++mask) {
                    if (__builtin_popcount(static_cast<unsigned>(mask)) != want) continue;
                    std::vector<int> kept;
                    for (int t = 0; t < labels; ++t)
                        if (mask >> t & 1) kept.push_back(t + 1);
                    Int formula = count_r_formula(v, m, n, kept);
                    CHECK(formula == count_region(build_r_region(v, m, n, kept)));
                }
            }
    }
}

TEST_CASE("flank exponents") {
    // Under the even shading, white holes charge their width l, black holes
    // charge -(l+1); the odd shading swaps the colors.
    CHECK(flank_exponent(2, 3, 1, 0) == 3);
    CHECK(flank_exponent(2, 3, 0, 0) == -4);
    CHECK(flank_exponent(2, 3, 1, 1) == -4);
    CHECK(flank_exponent(2, 3, 0, 1) == 3);
    CHECK(flank_exponent_alt(2, 3, 1, 0) == -3);
    CHECK(flank_exponent_alt(2, 3, 0, 0) == 2);

    // A balanced pair 'white O_{k,l} + black O_{l,k}' sums to l-k-1 under
    // either bookkeeping.
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            int width = flank_exponent(k, l, 1, 0) + flank_exponent(l, k, 0, 0);
            int height = flank_exponent_alt(k, l, 1, 0) + flank_exponent_alt(l, k, 0, 0);
            CHECK(width == l - k - 1);
            CHECK(height == l - k - 1);
        }
}

TEST_CASE("hole evolution forms") {
    // Active holes grow taller; a slit of zero width resolves into one
    // separation per cell along its own axis.
    EvolvedHole e = evolved_form(TorusHole{1, 1, 2, 1, 1}, 0);
    REQUIRE(std::holds_alternative<TorusHole>(e));
    TorusHole h = std::get<TorusHole>(e);
    CHECK(h.k == 2);
    CHECK(h.l == 0);
    CHECK(h.placement == 0);
    CHECK(h.cx == 2);
    CHECK(h.cy == 1);

    // Inactive hole of zero height degenerates into horizontal separations.
    EvolvedHole q = evolved_form(TorusHole{0, 1, 3, 5, 0}, 0);
    REQUIRE(std::holds_alternative<std::vector<TorusSep>>(q));
    auto seps = std::get<std::vector<TorusSep>>(q);
    REQUIRE(seps.size() == 2);
    CHECK(seps[0] == (TorusSep{1, 2, 5}));
    CHECK(seps[1] == (TorusSep{1, 4, 5}));

    // Active vertical slit: separations walk down the slit cells.
    EvolvedHole w = evolved_form(TorusHole{2, 0, 1, 2, 1}, 0);
    REQUIRE(std::holds_alternative<std::vector<TorusSep>>(w));
    auto vs = std::get<std::vector<TorusSep>>(w);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0] == (TorusSep{0, 1, 0}));
    CHECK(vs[1] == (TorusSep{0, 1, 2}));
    CHECK(vs[2] == (TorusSep{0, 1, 4}));
}

TEST_CASE("window label runs and kept sets") {
    CHECK(window_label_run(WindowSpec{1, 5}) == std::make_pair(2, 3));
    CHECK(window_label_run(WindowSpec{5, 17}) == std::make_pair(6, 11));
    CHECK(window_kept_labels(Family::wide_even, 2, {WindowSpec{1, 5}}) ==
          std::vector<int>{1, 4});
    CHECK(window_kept_labels(Family::tall_odd, 25,
                             {WindowSpec{1, 3}, WindowSpec{5, 17}, WindowSpec{1, 31}}) ==
          std::vector<int>{3, 4, 5, 12, 13, 14});
}

TEST_CASE("window exponent arithmetic") {
    CHECK(window_exponent(Family::wide_even, 2, 1, 1) == 4);
    CHECK(window_exponent(Family::wide_even, 2, 1, 2) == 5);
    CHECK(window_exponent(Family::tall_odd, 5, 1, 1) == -4);
    CHECK(window_exponent(Family::tall_odd, 7, 3, 1) == -12);
    CHECK(window_exponent(Family::tall_even, 4, 1, 1) == -3);
}

TEST_CASE("predicted window counts") {
    CHECK(predicted_windowed_count(Family::wide_even, 2, 1, {WindowSpec{1, 5}}) == 128);
    CHECK(predicted_windowed_count(Family::wide_even, 2, 1,
                                   {WindowSpec{1, 5}, WindowSpec{1, 9}}) == 256);
}
