#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "aztec/verify.hpp"

using namespace aztec;

TEST_CASE("power of two scaling") {
    CHECK(pow2_int(0) == 1);
    CHECK(pow2_int(10) == 1024);
    CHECK(eq_scaled(8, 2, 2));
    CHECK(eq_scaled(2, -2, 8));
    CHECK(eq_scaled(5, 0, 5));
    CHECK_FALSE(eq_scaled(3, 1, 2));
    CHECK(eq_scaled(0, 7, 0));
    CHECK(make_ratio(4, 6) == mpq_class(2, 3));
    CHECK(make_ratio(0, 5) == 0);
    CHECK(make_ratio(3, -6) == mpq_class(-1, 2));
}

TEST_CASE("deterministic rng") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        int x = a.range(-3, 9);
        CHECK(x == b.range(-3, 9));
        CHECK(x >= -3);
        CHECK(x <= 9);
    }
    Rng c(43);
    bool same = true;
    for (int i = 0; i < 20; ++i) same = same && (a.pick(1000) == c.pick(1000));
    CHECK_FALSE(same);
}

TEST_CASE("parallel for covers every index once") {
    const int n = 503;
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, 4, [&](int i) { hits[i].fetch_add(1); });
    for (int i = 0; i < n; ++i) CHECK(hits[i].load() == 1);

    CHECK_THROWS_AS(parallel_for(50, 4,
                                 [](int i) {
                                     if (i == 17) throw SpecError("boom");
                                 }),
                    SpecError);
}

TEST_CASE("thread count resolution") {
    CHECK(verify_thread_count(3) == 3);
    setenv("AZTEC_THREADS", "2", 1);
    CHECK(verify_thread_count(0) == 2);
    CHECK(verify_thread_count(5) == 5);
    unsetenv("AZTEC_THREADS");
    CHECK(verify_thread_count(0) >= 1);
}

TEST_CASE("count identity classification") {
    CheckResult ok = count_identity("c", "i", 8, 2, 2);
    CHECK(ok.pass);
    CHECK_FALSE(ok.vacuous);
    CheckResult bad = count_identity("c", "i", 8, 1, 2);
    CHECK_FALSE(bad.pass);
    CheckResult vac = count_identity("c", "i", 0, 3, 5);
    CHECK(vac.pass);
    CHECK(vac.vacuous);
    CheckResult both_zero = count_identity("c", "i", 0, 3, 0, true);
    CHECK(both_zero.pass);
    CHECK(both_zero.vacuous);
    // A symmetric identity treats a one sided zero as a real failure.
    CheckResult sym = count_identity("c", "i", 0, 0, 5, true);
    CHECK_FALSE(sym.pass);
}

TEST_CASE("hole generators respect the parity rules") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        int k = rng.range(0, 2), l = rng.range(0, 2);
        int placement = rng.coin() ? 1 : 0;
        auto [cx, cy] = random_hole_center(rng, 4, 5, k, l, placement);
        CHECK(torus_hole_majority(k, cy) == placement);
        CHECK(((cx + cy) % 2 + 2) % 2 == ((1 + k + l) % 2 + 2) % 2);
        CHECK(cx >= 0);
        CHECK(cx < 10);
        CHECK(cy >= 0);
        CHECK(cy < 8);
    }

    auto g = random_balanced_torus(rng, 5, 5, 2, 2);
    REQUIRE(g.has_value());
    CHECK(g->holes.size() == 4);
    CHECK(holes_well_separated(*g));
    int charge = 0;
    for (const TorusHole& h : g->holes)
        charge += odd_window_charge(h.k, h.l, h.placement);
    CHECK(charge == 0);
}

TEST_CASE("separation distance on the wrapped board") {
    TorusGraph close_pair =
        build_torus(5, 5, {TorusHole{0, 0, 1, 0, 1}, TorusHole{0, 0, 2, 1, 0}});
    CHECK_FALSE(holes_well_separated(close_pair));
    TorusGraph far_pair =
        build_torus(5, 5, {TorusHole{0, 0, 1, 0, 1}, TorusHole{0, 0, 6, 5, 0}});
    CHECK(holes_well_separated(far_pair));
    // Wrap-around distance counts: cells at opposite frame edges are close.
    TorusGraph wrapped =
        build_torus(5, 5, {TorusHole{0, 0, 1, 0, 1}, TorusHole{0, 0, 0, 9, 0}});
    CHECK_FALSE(holes_well_separated(wrapped));
}

TEST_CASE("twisted determinant corner cases") {
    std::array<Int, 4> dets{1, 0, 0, 0};
    CHECK_FALSE(combine_twisted_dets(dets, 0).has_value());
    std::array<Int, 4> zero{0, 0, 0, 0};
    auto z = combine_twisted_dets(zero, 5);
    REQUIRE(z.has_value());
    CHECK(*z == 0);
}

TEST_CASE("bare correlation is one") {
    CHECK(finite_size_correlation(4, 4, {}) == 1);
}

TEST_CASE("registry and suites") {
    const auto& reg = check_registry();
    CHECK(reg.size() == 15);
    std::set<std::string> ids;
    for (const Check& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.description.empty());
        for (const std::string& s : c.suites) {
            auto ks = known_suites();
            CHECK(std::find(ks.begin(), ks.end(), s) != ks.end());
        }
    }
    CHECK(ids.count("ad_power") == 1);
    CHECK(ids.count("torus_evolution") == 1);
    CHECK(ids.count("window_ratio_identity") == 1);

    VerifyOptions opt;
    opt.suite = "nope";
    CHECK_THROWS_AS(run_suite(opt), SpecError);
    CHECK_THROWS_AS(run_check("nope", VerifyOptions{}), SpecError);
}

TEST_CASE("single check runs and serializes") {
    VerifyOptions opt;
    auto rs = run_check("ad_power", opt);
    REQUIRE_FALSE(rs.empty());
    for (const CheckResult& r : rs) {
        CHECK(r.check == "ad_power");
        CHECK(r.pass);
        Json j = result_json(r);
        CHECK(j["check"] == "ad_power");
        CHECK(j["status"] == "pass");
    }
}

TEST_CASE("smoke suite is green") {
    VerifyOptions opt;
    opt.suite = "smoke";
    auto rs = run_suite(opt);
    REQUIRE_FALSE(rs.empty());
    int fails = 0;
    for (const CheckResult& r : rs) {
        if (!r.pass) {
            ++fails;
            UNSCOPED_INFO(r.check + " " + r.instance + ": " + r.detail);
        }
    }
    CHECK(fails == 0);

    Json s = summary_json(opt, rs);
    CHECK(s["summary"]["suite"] == "smoke");
    CHECK(s["summary"]["instances"] == static_cast<int>(rs.size()));
    CHECK(s["summary"]["fail"] == fails);

    // Same seed, same outcome: the suite is deterministic.
    auto rs2 = run_suite(opt);
    REQUIRE(rs2.size() == rs.size());
    for (size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs2[i].check == rs[i].check);
        CHECK(rs2[i].instance == rs[i].instance);
        CHECK(rs2[i].pass == rs[i].pass);
    }
}
