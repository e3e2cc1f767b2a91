#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks of the command line tool. HYPHOR_CLI_PATH is injected by
// the build as the absolute path of the built binary.

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HYPHOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("table subcommand reproduces the family tables") {
    const RunResult r = run("table --family 3,6 --p 7..9");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"p", "vol_F", "vol_pieces", "delta",
                                              "realizable"});
    const double expected[3][3] = {{0.31781165, 0.26463185, 0.83266882},
                                   {0.34695830, 0.27901923, 0.80418664},
                                   {0.36482363, 0.28351212, 0.77712105}};
    for (int i = 0; i < 3; ++i) {
        REQUIRE(rows[size_t(i) + 1].size() == 5);
        CHECK(std::stod(rows[size_t(i) + 1][0]) == doctest::Approx(7.0 + i));
        for (int j = 0; j < 3; ++j)
            CHECK(std::stod(rows[size_t(i) + 1][size_t(j) + 1]) ==
                  doctest::Approx(expected[i][j]).epsilon(1e-6));
        CHECK(rows[size_t(i) + 1][4] == "true");
        // The delta column is exactly the ratio of the printed volumes.
        const double vol = std::stod(rows[size_t(i) + 1][1]);
        const double pieces = std::stod(rows[size_t(i) + 1][2]);
        CHECK(std::stod(rows[size_t(i) + 1][3]) ==
              doctest::Approx(pieces / vol).epsilon(1e-9));
    }
}

TEST_CASE("table handles lists and non-realizable members") {
    const RunResult r = run("table --family 4,4 --p 6,5");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(std::stod(rows[1][0]) == 5.0);  // sorted ascending
    CHECK(std::stod(rows[2][0]) == 6.0);
    CHECK(std::stod(rows[1][3]) == doctest::Approx(0.81295769).epsilon(1e-6));

    const RunResult nr = run("table --family 3,6 --p 6.5");
    CHECK(nr.status == 0);
    const auto nrows = parse_csv(nr.out);
    REQUIRE(nrows.size() == 2);
    CHECK(nrows[1][4] == "false");
}

TEST_CASE("table rejects bad input") {
    CHECK(run("table --family 5,5 --p 7").status == 3);
    CHECK(run("table --family 3,6 --p 4").status == 3);  // below family range
    CHECK(run("table --family 3,6").status == 2);        // missing option
    CHECK(run("tables").status == 2);                    // unknown subcommand
    CHECK(run("--help").status == 0);
}

TEST_CASE("planar curve output") {
    const RunResult r = run("curve --kind 2d-type1 --from 0.01 --to 0.99 --step 0.01");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 100);
    CHECK(rows[0] == std::vector<std::string>{"a", "delta"});
    const double pi = 3.14159265358979312;
    for (size_t i = 1; i < rows.size(); ++i) {
        const double d = std::stod(rows[i][1]);
        CHECK(d > 2.0 / pi);
        CHECK(d < 3.0 / pi);
    }
    // Single sample.
    const RunResult one = run("curve --kind 2d-horo --from 0.7071068 --to 0.7071068 "
                              "--step 0.1");
    const auto orows = parse_csv(one.out);
    REQUIRE(orows.size() == 2);
    CHECK(std::stod(orows[1][1]) == doctest::Approx(0.90032).epsilon(1e-4));
}

TEST_CASE("surface and 3d curves") {
    const RunResult r = run("curve --kind 2d-surface --from 0.3 --to 0.5 --step 0.1");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 10);  // 3 columns x 3 y-samples + header
    CHECK(rows[0] == std::vector<std::string>{"a", "y", "delta"});

    const RunResult c = run("curve --kind 3d-36 --from 6.2 --to 6.4 --step 0.1");
    CHECK(c.status == 0);
    const auto crows = parse_csv(c.out);
    REQUIRE(crows.size() == 4);
    CHECK(crows[0] == std::vector<std::string>{"p", "delta"});
    for (size_t i = 1; i < crows.size(); ++i) {
        CHECK(std::stod(crows[i][1]) > 0.84);
        CHECK(std::stod(crows[i][1]) < 0.855);
    }
}

TEST_CASE("curve edge cases") {
    // Empty range: header only, success.
    const RunResult r = run("curve --kind 2d-type1 --from 0.9 --to 0.2 --step 0.1");
    CHECK(r.status == 0);
    CHECK(r.out == "a,delta\n");
    // Out-of-domain samples are a domain error.
    CHECK(run("curve --kind 2d-type1 --from 0 --to 0.5 --step 0.1").status == 3);
    CHECK(run("curve --kind 2d-type2 --from 0.5 --to 0.9 --step 0.1").status == 3);
    CHECK(run("curve --kind 3d-36 --from 5 --to 6.5 --step 0.5").status == 3);
    CHECK(run("curve --kind nope --from 0.1 --to 0.2 --step 0.1").status == 3);
    // Non-positive step is a usage error.
    CHECK(run("curve --kind 2d-type1 --from 0.1 --to 0.2 --step 0").status == 2);
}

TEST_CASE("popt subcommand emits the optimum as JSON") {
    const RunResult r = run("popt");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["p_interval"].size() == 2);
    CHECK(j["p_interval"][0].get<double>() >= 6.05 - 1e-12);
    CHECK(j["p_interval"][1].get<double>() <= 6.06 + 1e-12);
    CHECK(j["delta_max"].get<double>() > 0.85397);
    CHECK(j["exceeds_bf_bound"].get<bool>());
}

TEST_CASE("validate subcommand defaults to the maximal pair") {
    const RunResult r = run("validate --p 7 --q 3 --r 6");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["admissible"].get<bool>());
    CHECK(j["disjoint"].get<bool>());
    CHECK(j["s"].get<double>() == doctest::Approx(0.847871170219425).epsilon(1e-9));
    CHECK(j["h"].get<double>() == doctest::Approx(1.201500467250211).epsilon(1e-9));
    CHECK(j["min_clearances"].size() == 3);

    const RunResult o = run("validate --p 5 --q 4 --r 4");
    const auto jo = nlohmann::json::parse(o.out);
    CHECK_FALSE(jo["admissible"].get<bool>());
    CHECK_FALSE(jo["disjoint"].get<bool>());
    CHECK(jo["horoball_ok"].get<bool>());

    const RunResult t = run("validate --p 5 --q 4 --r 4 --s 0.64 --h 0.7");
    const auto jt = nlohmann::json::parse(t.out);
    CHECK(jt["admissible"].get<bool>());

    CHECK(run("validate --p 3 --q 5 --r 3").status == 3);  // no frustum shape
}

TEST_CASE("volume subcommand") {
    const RunResult r = run("volume --p 7 --q 3 --r 6");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["volume"].get<double>() == doctest::Approx(0.31781164).epsilon(1e-6));
    CHECK(run("volume --p 3 --q 5 --r 3").status == 3);  // outside the families
}

TEST_CASE("output is deterministic") {
    const RunResult a = run("table --family 6,3 --p 4..6");
    const RunResult b = run("table --family 6,3 --p 4..6");
    CHECK(a.out == b.out);
    const RunResult c = run("validate --p 7 --q 3 --r 6");
    const RunResult d = run("validate --p 7 --q 3 --r 6");
    CHECK(c.out == d.out);
}
