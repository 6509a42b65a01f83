#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lamps/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = lamps::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kC4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const std::string kC3 = "3 3\n0 1\n1 2\n0 2\n";
const std::string kP3 = "3 2\n0 1\n1 2\n";

}  // namespace

TEST_CASE("gen emits edge lists") {
    CliResult r = run_cli({"gen", "path", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "4 3\n0 1\n1 2\n2 3\n");

    CliResult star = run_cli({"gen", "star", "4"});
    CHECK(star.out == "4 3\n0 1\n0 2\n0 3\n");

    CliResult bad = run_cli({"gen", "path"});
    CHECK(bad.code == 2);

    CliResult unknown = run_cli({"gen", "moebius", "4"});
    CHECK(unknown.code == 2);
}

TEST_CASE("gen seeds are reproducible") {
    CliResult a = run_cli({"gen", "random", "8", "0.5", "--seed", "9"});
    CliResult b = run_cli({"gen", "random", "8", "0.5", "--seed", "9"});
    CliResult c = run_cli({"gen", "random", "8", "0.5", "--seed", "10"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("solve reads stdin and reports json") {
    CliResult r = run_cli({"solve", "--problem", "ev", "--minimum", "--format", "json", "-"}, kC4);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["problem"] == "ev");
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 4);
    CHECK(j["feasible"] == true);
    CHECK(j["size"] == 2);
    CHECK(j["optimal"] == true);
    CHECK(j["bounds"]["lower"] == 2);
    CHECK(j["bounds"]["upper"] == 3);
    REQUIRE(j["witness"].is_array());
    CHECK(j["witness"].size() == 2);

    // identical invocations are byte-identical
    CliResult again = run_cli({"solve", "--problem", "ev", "--minimum", "--format", "json", "-"}, kC4);
    CHECK(again.out == r.out);
}

TEST_CASE("solve text mode and infeasible exits") {
    CliResult ve = run_cli({"solve", "--problem", "ve"}, kC3);
    CHECK(ve.code == 1);
    CHECK(ve.out.find("feasible: no") != std::string::npos);
    CHECK(ve.out.find("not bipartite") != std::string::npos);

    CliResult ev = run_cli({"solve", "--problem", "ev"}, kP3);
    CHECK(ev.code == 1);
    CHECK(ev.out.find("odd-order component") != std::string::npos);

    CliResult vv = run_cli({"solve", "--problem", "vv"}, kP3);
    CHECK(vv.code == 0);
    CHECK(vv.out.find("witness: 1") != std::string::npos);
}

TEST_CASE("solve respects the nullity cap") {
    // complete graphs share one closed neighborhood: rank 1, nullity n-1
    std::string k24 = run_cli({"gen", "complete", "24"}).out;
    CliResult r = run_cli({"solve", "--problem", "vv", "--minimum"}, k24);
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);

    CliResult relaxed =
        run_cli({"solve", "--problem", "vv", "--minimum", "--nullity-cap", "23"}, k24);
    CHECK(relaxed.code == 0);
}

TEST_CASE("verify round-trips solve output") {
    CliResult solved =
        run_cli({"solve", "--problem", "ev", "--minimum", "--format", "json", "-"}, kC4);
    auto witness = temp_file("lamps_test_witness.json", solved.out);

    CliResult ok = run_cli({"verify", "--problem", "ev", "--witness", witness.string()}, kC4);
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    // same ids as a plain list
    auto plain = temp_file("lamps_test_witness.txt", "0 2\n");
    CHECK(run_cli({"verify", "--problem", "ev", "--witness", plain.string()}, kC4).code == 0);

    auto wrong = temp_file("lamps_test_wrong.txt", "0 1\n");
    CliResult bad = run_cli({"verify", "--problem", "ev", "--witness", wrong.string()}, kC4);
    CHECK(bad.code == 1);
    CHECK(bad.out == "invalid\n");

    // witness JSON for another problem is a usage error
    CliResult mismatched =
        run_cli({"verify", "--problem", "vv", "--witness", witness.string()}, kC4);
    CHECK(mismatched.code == 2);

    auto out_of_range = temp_file("lamps_test_oor.txt", "9\n");
    CHECK(run_cli({"verify", "--problem", "ev", "--witness", out_of_range.string()}, kC4).code == 2);

    std::filesystem::remove(witness);
    std::filesystem::remove(plain);
    std::filesystem::remove(wrong);
    std::filesystem::remove(out_of_range);
}

TEST_CASE("reduce emits a weighted gadget that match solves") {
    CliResult reduced = run_cli({"reduce", "-"}, kC4);
    REQUIRE(reduced.code == 0);
    CHECK(reduced.out.find("20 24\n") == 0);
    CHECK(reduced.out.find("# cross ") != std::string::npos);

    CliResult matched = run_cli({"match", "-"}, reduced.out);
    CHECK(matched.code == 0);
    CHECK(matched.out.find("weight 4\n") == 0);  // twice the optimal size

    auto map_path = std::filesystem::temp_directory_path() / "lamps_test_map.txt";
    CliResult mapped = run_cli({"reduce", "--map-out", map_path.string(), "-"}, kC4);
    CHECK(mapped.code == 0);
    CHECK(mapped.out.find("# cross") == std::string::npos);
    std::ifstream f(map_path);
    std::string line;
    int lines = 0;
    while (std::getline(f, line)) {
        CHECK(line.rfind("cross ", 0) == 0);
        ++lines;
    }
    CHECK(lines == 4);
    f.close();
    std::filesystem::remove(map_path);
}

TEST_CASE("match reports missing matchings") {
    CliResult none = run_cli({"match", "-"}, "3 2\n0 1 0\n1 2 0\n");
    CHECK(none.code == 1);
    CHECK(none.out == "none\n");

    CliResult c4 = run_cli({"match", "-"}, "4 4\n0 1 1\n1 2 2\n2 3 3\n0 3 4\n");
    CHECK(c4.code == 0);
    CHECK(c4.out == "weight 4\n0 1\n2 3\n");
}

TEST_CASE("oracle lists all solutions in canonical order") {
    CliResult ve = run_cli({"oracle", "--problem", "ve"}, kP3);
    CHECK(ve.code == 0);
    CHECK(ve.out == "count 2\n1\n0 2\n");

    CliResult ev = run_cli({"oracle", "--problem", "ev"}, "4 3\n0 1\n1 2\n2 3\n");
    CHECK(ev.out == "count 1\n0 2\n");
}

TEST_CASE("check runs a theorem suite") {
    CliResult r = run_cli({"check", "--suite", "uniqueness"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);

    CliResult unknown = run_cli({"check", "--suite", "bogus"});
    CHECK(unknown.code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve", "--problem", "xx"}, kC4).code == 2);
    CHECK(run_cli({"solve", "--problem", "ev", "/nonexistent/graph"}).code == 2);
    CHECK(run_cli({"solve", "--problem", "ev"}, "not a graph").code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
