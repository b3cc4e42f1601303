#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aztec/engine.hpp"
#include "aztec/formulas.hpp"

using namespace aztec;

namespace {

using Adj = std::vector<std::vector<int>>;

Adj path(int n) {
    Adj a(n);
    for (int i = 0; i + 1 < n; ++i) {
        a[i].push_back(i + 1);
        a[i + 1].push_back(i);
    }
    return a;
}

Adj cycle(int n) {
    Adj a = path(n);
    a[0].push_back(n - 1);
    a[n - 1].push_back(0);
    return a;
}

}  // namespace

TEST_CASE("brute force on explicit graphs") {
    CHECK(count_matchings_brute(Adj{}) == 1);
    CHECK(count_matchings_brute(path(2)) == 1);
    CHECK(count_matchings_brute(path(3)) == 0);
    CHECK(count_matchings_brute(path(4)) == 1);
    CHECK(count_matchings_brute(cycle(4)) == 2);
    CHECK(count_matchings_brute(cycle(6)) == 2);
    CHECK(count_matchings_brute(cycle(5)) == 0);

    Adj k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) k4[i].push_back(j);
    CHECK(count_matchings_brute(k4) == 3);

    // Two disjoint edges: the matching must cover both components.
    Adj two(4);
    two[0] = {1};
    two[1] = {0};
    two[2] = {3};
    two[3] = {2};
    CHECK(count_matchings_brute(two) == 1);

    // An isolated vertex kills every perfect matching.
    Adj iso(3);
    iso[0] = {1};
    iso[1] = {0};
    CHECK(count_matchings_brute(iso) == 0);
}

TEST_CASE("brute force size guard") {
    CHECK_THROWS_AS(count_matchings_brute(path(50)), EngineRefusal);
    CHECK(count_matchings_brute(path(50), 64) == 1);
    CHECK_THROWS_AS(count_matchings_brute(path(200), 128), EngineRefusal);
}

TEST_CASE("planar count matches the diamond power law") {
    for (int n = 1; n <= 4; ++n) {
        Int want = aztec_diamond_count(n);
        MatchGraph g = dual_graph(build_aztec_diamond(n));
        CHECK(count_matchings_planar(g) == want);
        if (g.size() <= 36) CHECK(count_matchings_brute(g) == want);
    }
}

TEST_CASE("planar and brute agree on random diamond subregions") {
    std::mt19937_64 rng(20260816);
    Region base = build_aztec_diamond(3);
    int found = 0;
    for (int rep = 0; rep < 60 && found < 20; ++rep) {
        // Remove one random white and one random black square.
        std::vector<Sq> white, black;
        for (Sq s : base.squares) (square_color(s) == 1 ? white : black).push_back(s);
        std::vector<Sq> cut{white[rng() % white.size()], black[rng() % black.size()]};
        Region r = region_minus(base, cut);
        MatchGraph g = dual_graph(r);
        Int b = count_matchings_brute(g);
        CHECK(count_matchings_planar(g) == b);
        ++found;
    }
    REQUIRE(found == 20);
}

TEST_CASE("engine dispatch and refusals") {
    Region r = build_aztec_diamond(2);
    CHECK(count_region(r, Engine::automatic) == 8);
    CHECK(count_region(r, Engine::kasteleyn) == 8);
    CHECK(count_region(r, Engine::brute) == 8);
    CHECK_THROWS_AS(count_region(r, Engine::torus), EngineRefusal);
    CHECK_THROWS_AS(count_region(build_aztec_diamond(6), Engine::brute), EngineRefusal);

    TorusGraph t = build_torus(2, 2, {});
    CHECK_THROWS_AS(count_torus(t, Engine::kasteleyn), EngineRefusal);
    CHECK(count_torus(t, Engine::automatic) == count_torus(t, Engine::brute));

    CHECK(engine_from_name("auto") == Engine::automatic);
    CHECK_THROWS_AS(engine_from_name("fast"), SpecError);
}

TEST_CASE("empty region counts one tiling") {
    CHECK(count_region(Region{}, Engine::automatic) == 1);
    CHECK(count_region(Region{}, Engine::brute) == 1);
}
