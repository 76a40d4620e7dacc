#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "latkit/cli.hpp"
#include "latkit/json_io.hpp"

using namespace latkit;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("f2-count reports 527") {
    RunResult r = run({"f2-count"});
    CHECK(r.code == 0);
    CHECK(r.out.find("527") != std::string::npos);

    RunResult j = run({"f2-count", "--json"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["nonzero_isotropic"] == 527);
    CHECK(parsed["total_isotropic"] == 528);
}

TEST_CASE("involution-action prints the reversal for the A series") {
    RunResult r = run({"involution-action", "--type", "A4", "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["permutation"] == json({3, 2, 1, 0}));

    RunResult text = run({"involution-action", "--type", "A2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("a1 -> a2") != std::string::npos);
}

TEST_CASE("lattice-info") {
    RunResult r = run({"lattice-info", "--e10", "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["rank"] == 10);
    CHECK(parsed["determinant"] == -1);
    CHECK(parsed["even"] == true);
    CHECK(parsed["signature"] == json({1, 9}));

    std::string path = write_temp("u.json", R"({"rank": 2, "gram": [[0, 1], [1, 0]]})");
    RunResult file = run({"lattice-info", "--file", path, "--json"});
    CHECK(file.code == 0);
    CHECK(json::parse(file.out)["determinant"] == -1);
    std::remove(path.c_str());

    std::string bad = write_temp("bad.json", "{nonsense");
    RunResult broken = run({"lattice-info", "--file", bad});
    CHECK(broken.code == 2);
    std::remove(bad.c_str());

    RunResult missing = run({"lattice-info"});
    CHECK(missing.code == 2);
}

TEST_CASE("roots and disc-group") {
    RunResult e8 = run({"roots", "--type", "E8", "--json"});
    CHECK(e8.code == 0);
    CHECK(json::parse(e8.out)["count"] == 120);

    RunResult a2 = run({"disc-group", "--type", "A2", "--json"});
    CHECK(a2.code == 0);
    json parsed = json::parse(a2.out);
    CHECK(parsed["invariant_factors"] == json({3}));
    CHECK(parsed["order"] == 3);
}

TEST_CASE("class-group table") {
    RunResult all = run({"class-group", "--all", "--json"});
    CHECK(all.code == 0);
    json rows = json::parse(all.out);
    CHECK(rows.size() == 20);

    RunResult d5 = run({"class-group", "--type", "D5", "--json"});
    json row = json::parse(d5.out)[0];
    CHECK(row["order"] == 4);
    CHECK(row["invariant_factors"] == json({4}));
    CHECK(row["two_torsion"] == false);
    CHECK(row["acts_as_minus_one"] == true);
}

TEST_CASE("e10-reduce") {
    // the interior point is already reduced
    E10Lattice e = build_e10();
    RunResult r = run({"e10-reduce", "--vec", vec_to_json(e.h).dump(), "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["word"].empty());
    CHECK(parsed["steps"] == 0);

    RunResult bad = run({"e10-reduce", "--vec", "[1,0"});
    CHECK(bad.code == 2);

    // a vector outside the positive cone violates the precondition
    RunResult outside = run({"e10-reduce", "--vec", "[1,0,0,0,0,0,0,0,0,0]"});
    CHECK(outside.code == 2);
}

TEST_CASE("e10-sigma and g0-check") {
    RunResult sig = run({"e10-sigma", "--index", "0", "--bound", "2", "--json"});
    CHECK(sig.code == 0);
    json parsed = json::parse(sig.out);
    CHECK(parsed["in_g0"] == true);

    std::string path = write_temp("sigma.json", parsed["sigma"].dump());
    RunResult check = run({"g0-check", "--file", path, "--json"});
    CHECK(check.code == 0);
    json verdict = json::parse(check.out);
    CHECK(verdict["is_isometry"] == true);
    CHECK(verdict["in_o_plus"] == true);
    CHECK(verdict["in_g0"] == true);
    std::remove(path.c_str());
}

TEST_CASE("f2-orbit and ramification") {
    // find an isotropic class to probe: f1 of the first plane reduces to one
    RunResult orbit_none = run({"f2-orbit", "--vec", "[0,0,1,0,1,0,0,0,0,0]", "--gens", "none",
                                "--json"});
    // the vector may or may not be isotropic; orbit works either way
    CHECK(orbit_none.code == 0);
    CHECK(json::parse(orbit_none.out)["size"] == 1);

    RunResult full = run({"ramification", "--vec", "[1,0,1,0,0,0,0,0,0,0]", "--json"});
    if (full.code == 0) {
        CHECK(json::parse(full.out)["degree"] == 527);
    } else {
        CHECK(full.code == 2);  // chosen class happened to be anisotropic
    }

    RunResult zero = run({"ramification", "--vec", "[0,0,0,0,0,0,0,0,0,0]"});
    CHECK(zero.code == 2);
}

TEST_CASE("word-search") {
    RunResult r = run({"word-search", "--recipe", "word:0,1,0", "--json"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["status"] == "found");
    CHECK(parsed["replay_ok"] == true);
    CHECK(parsed.contains("wall_time_ms"));
    CHECK(parsed["word"].size() <= 3);

    RunResult sig = run({"word-search", "--recipe", "sigma-word:3", "--depth", "6", "--json"});
    CHECK(sig.code == 0);
    CHECK(json::parse(sig.out)["status"] == "found");

    RunResult bad = run({"word-search", "--recipe", "nonsense:1"});
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"roots"}).code == 2);  // missing required --type
}

TEST_CASE("verify-all is deterministic and passes") {
    RunResult a = run({"verify-all", "--json"});
    CHECK(a.code == 0);
    json report = json::parse(a.out);
    CHECK(report.size() == 10);
    for (const auto& row : report) {
        CHECK(row["status"] == "pass");
        CHECK(row.contains("check_name"));
        CHECK(row.contains("claim"));
        CHECK(row.contains("details"));
    }

    RunResult b = run({"verify-all", "--json"});
    CHECK(a.out == b.out);  // byte-identical reports
}
