#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "aztec/serialize.hpp"
#include "aztec/verify.hpp"

using namespace aztec;

namespace {

const std::string cli = AZTEC_CLI_PATH;

struct RunResult {
    int status = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs a shell command with stdout captured to a scratch file.
RunResult run(const std::string& cmd) {
    static int counter = 0;
    std::string path = "/tmp/aztec_cli_out_" + std::to_string(counter++) + ".txt";
    int rc = std::system((cmd + " > " + path + " 2>/dev/null").c_str());
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(path);
    std::remove(path.c_str());
    return r;
}

}  // namespace

TEST_CASE("formula subcommand prints plain counts") {
    RunResult r = run(cli + " formula --diamond 5");
    CHECK(r.status == 0);
    CHECK(r.out == "32768\n");

    RunResult f = run(cli + " formula --variant R --m 4 --n 7 --kept 1,4,5,7");
    CHECK(f.status == 0);
    CHECK(f.out == "3072\n");

    RunResult w = run(cli + " formula --family AR --m 2 --k 1 --hole 1@5 --factor");
    CHECK(w.status == 0);
    CHECK(w.out == "128 = 2^7\n");
}

TEST_CASE("build pipes into count") {
    RunResult r = run(cli + " build --family AD --m 3 --n 3 | " + cli + " count");
    CHECK(r.status == 0);
    CHECK(r.out == "64\n");

    RunResult w = run(cli + " build --family AR --m 2 --k 1 --hole 1@5 | " + cli +
                      " count --factor");
    CHECK(w.status == 0);
    CHECK(w.out == "128 = 2^7\n");

    RunResult t = run(cli + " build --torus --m 2 --n 2 | " + cli + " count --json");
    CHECK(t.status == 0);
    Json j = Json::parse(t.out);
    CHECK(j["type"] == "count");
    CHECK(j["engine"] == "auto");

    RunResult slit = run(cli + " build --variant R --m 2 --n 4 --kept 1,4 | " + cli + " count");
    CHECK(slit.status == 0);
    CHECK(slit.out == "8\n");
}

TEST_CASE("build emits graphs and drawings") {
    RunResult g = run(cli + " build --torus --m 2 --n 2 --format graph");
    CHECK(g.status == 0);
    Json j = Json::parse(g.out);
    CHECK(j["type"] == "torus_graph");
    CHECK(j["vertices"].size() == 8);

    RunResult svg = run(cli + " build --family AD --m 2 --n 2 --format svg");
    CHECK(svg.status == 0);
    CHECK(svg.out.substr(0, 4) == "<svg");

    RunResult rsvg = run(cli + " build --family AD --m 2 --n 2 | " + cli + " render");
    CHECK(rsvg.status == 0);
    CHECK(rsvg.out.substr(0, 4) == "<svg");
}

TEST_CASE("exit codes separate failure classes") {
    // Engine refusal: the torus engine cannot count a planar region.
    RunResult refuse =
        run(cli + " build --family AD --m 2 --n 2 | " + cli + " count --engine torus");
    CHECK(refuse.status == 3);

    // Missing input file.
    RunResult missing = run(cli + " count --spec /tmp/aztec_no_such_spec.json");
    CHECK(missing.status == 4);

    // Malformed spec document.
    RunResult bad = run("echo '{}' | " + cli + " count");
    CHECK(bad.status == 2);

    // Invalid parameters inside a valid envelope.
    RunResult param = run(cli + " build --variant R --m 3 --n 4 --kept 1,4");
    CHECK(param.status == 2);

    // Unknown flags come back as usage errors.
    RunResult usage = run(cli + " count --no-such-flag");
    CHECK(usage.status == 2);

    RunResult help = run(cli + " --help");
    CHECK(help.status == 0);
    CHECK(help.out.find("build") != std::string::npos);
}

TEST_CASE("verify subcommand reports and gates") {
    RunResult r = run(cli + " verify --check ad_power");
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line, last;
    int result_lines = 0;
    while (std::getline(lines, line)) {
        Json j = Json::parse(line);
        if (j.contains("summary")) {
            last = line;
        } else {
            CHECK(j["status"] == "pass");
            ++result_lines;
        }
    }
    CHECK(result_lines > 0);
    REQUIRE_FALSE(last.empty());
    Json summary = Json::parse(last);
    CHECK(summary["summary"]["fail"] == 0);
    CHECK(summary["summary"]["instances"] == result_lines);

    // Identical invocations are byte-identical.
    RunResult again = run(cli + " verify --check ad_power");
    CHECK(again.out == r.out);

    RunResult listing = run(cli + " verify --list");
    CHECK(listing.status == 0);
    CHECK(listing.out.find("ad_power") != std::string::npos);
    CHECK(listing.out.find("window_ratio_identity") != std::string::npos);

    RunResult unknown = run(cli + " verify --suite nope");
    CHECK(unknown.status == 2);
}

TEST_CASE("complement subcommand applies one step") {
    RunResult r = run(cli + " build --family AD --m 1 --n 1 | " + cli +
                      " complement --sigma 1");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["type"] == "completion");
    CHECK(j["t"] == 1);
    CHECK(j["result"]["vertices"].empty());

    RunResult grow = run(cli + " build --family AD --m 1 --n 1 | " + cli +
                         " complement --sigma 0");
    CHECK(grow.status == 0);
    Json gj = Json::parse(grow.out);
    CHECK(gj["t"] == -2);
    CHECK(gj["result"]["vertices"].size() == 12);

    RunResult torus = run(cli + " build --torus --m 3 --n 3 | " + cli +
                          " complement --sigma 0");
    CHECK(torus.status == 0);
    Json tj = Json::parse(torus.out);
    CHECK(tj["result"]["type"] == "torus_graph");
    CHECK(tj["t"] == 0);
}

TEST_CASE("correlate matches the library value") {
    RunResult bare = run(cli + " correlate --m 4 --n 4");
    CHECK(bare.status == 0);
    CHECK(bare.out == "1\n");

    std::vector<aztec::TorusHole> holes{aztec::TorusHole{0, 0, 1, 0, 1},
                                        aztec::TorusHole{0, 0, 6, 5, 0}};
    mpq_class expect = aztec::finite_size_correlation(4, 4, holes);
    RunResult r = run(cli + " correlate --m 4 --n 4 --hole 0,0@1,0 --hole 0,0@6,5");
    CHECK(r.status == 0);
    CHECK(r.out == expect.get_str() + "\n");

    RunResult j = run(cli + " correlate --m 4 --n 4 --hole 0,0@1,0 --hole 0,0@6,5 --json");
    CHECK(j.status == 0);
    Json jj = Json::parse(j.out);
    CHECK(jj["type"] == "correlation");
    CHECK(jj["num"] == expect.get_num().get_str());
    CHECK(jj["den"] == expect.get_den().get_str());
}

TEST_CASE("fixture specs parse and count through the pipeline") {
    std::string dir = AZTEC_FIXTURE_DIR;

    RunResult d = run(cli + " count --spec " + dir + "/diamond_order3.json");
    CHECK(d.status == 0);
    CHECK(d.out == "64\n");

    RunResult k = run(cli + " count --spec " + dir + "/keystone_window.json --factor");
    CHECK(k.status == 0);
    CHECK(k.out == "128 = 2^7\n");

    RunResult s = run(cli + " count --spec " + dir + "/slit_rgraph.json");
    CHECK(s.status == 0);
    CHECK(s.out == "8\n");

    RunResult t = run(cli + " count --spec " + dir + "/torus_pair_4x4.json");
    CHECK(t.status == 0);
    aztec::SpecDoc doc = aztec::load_spec(dir + "/torus_pair_4x4.json");
    REQUIRE(doc.is_torus);
    CHECK(t.out == aztec::to_decimal(aztec::count_matchings_torus(doc.torus)) + "\n");

    RunResult bad = run(cli + " count --spec " + dir + "/bad_field.json");
    CHECK(bad.status == 2);
}
