// End-to-end checks of the command-line tool: exit codes, stdout, and JSON
// reports validated against the shipped schema.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcl/fixtures.hpp"
#include "qcl/report.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QCL_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path tmp_dir() {
    auto d = fs::temp_directory_path() / "qcl_cli_tests";
    fs::create_directories(d);
    return d;
}

std::string write_fixture_file(const std::string& name) {
    auto p = tmp_dir() / (name + ".txt");
    std::ofstream f(p);
    f << qcl::print_exponent_matrix(qcl::fixture_by_name(name).matrix);
    return p.string();
}

qcl_test::SchemaValidator& schema() {
    static qcl_test::SchemaValidator v = [] {
        std::ifstream in(std::string(QCL_SCHEMA_DIR) + "/report.schema.json");
        REQUIRE(in.good());
        nlohmann::json s;
        in >> s;
        return qcl_test::SchemaValidator(std::move(s));
    }();
    return v;
}

nlohmann::json load_and_validate(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    std::string why;
    bool ok = schema().validate(j, &why);
    CAPTURE(why, p.string());
    REQUIRE(ok);
    return j;
}

}  // namespace

TEST_CASE("missing input file is a usage error") {
    auto r = run("girth --matrix /nonexistent/missing.txt");
    REQUIRE(r.exit_code == 2);
}

TEST_CASE("unknown flags are rejected") {
    REQUIRE(run("girth --matrix x --frobnicate").exit_code == 2);
    REQUIRE(run("").exit_code == 2);
    REQUIRE(run("verify-table1").exit_code == 2);  // needs --all or --fixture
}

TEST_CASE("girth command with JSON report") {
    auto m = write_fixture_file("table1-g6-n5");
    auto jpath = tmp_dir() / "girth.json";
    auto r = run("girth --matrix " + m + " --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("6"));
    auto j = load_and_validate(jpath);
    REQUIRE(j["exponent_girth"] == 6);
    REQUIRE(j["bfs_girth"] == 6);
    REQUIRE(j["agree"] == true);
}

TEST_CASE("profile-check exit codes distinguish pass from fail") {
    auto m = write_fixture_file("table1-g6-n5");
    auto jpath = tmp_dir() / "profile.json";
    REQUIRE(run("profile-check --matrix " + m + " --profile girth6-ets-free").exit_code == 0);
    auto r = run("profile-check --matrix " + m + " --profile girth8-basic --json " + jpath.string());
    REQUIRE(r.exit_code == 1);
    auto j = load_and_validate(jpath);
    REQUIRE(j["pass"] == false);
    REQUIRE(j["girth"] == 6);
}

TEST_CASE("cycles command reports canonical solutions") {
    auto m = write_fixture_file("table1-g6-n5");
    auto jpath = tmp_dir() / "cycles.json";
    auto r = run("cycles --matrix " + m + " --k 3 --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    auto j = load_and_validate(jpath);
    REQUIRE(j["count"] == 16);  // 8 + 8 canonical 6-cycles
}

TEST_CASE("color command matches the library counts") {
    auto r = run("color --graph K34 --colors 4 --forbid-quad 1,2 --mode count");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "0\n");
    auto jpath = tmp_dir() / "color.json";
    r = run("color --graph K34 --colors 4 --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "576\n");
    auto j = load_and_validate(jpath);
    REQUIRE(j["count"] == 576);
    // graph files work as well as builtin tags
    auto gpath = tmp_dir() / "k5.graph";
    std::ofstream(gpath) << qcl::print_vn_graph(qcl::make_complete(5));
    r = run("color --graph " + gpath.string() + " --colors 4 --mode exists");
    REQUIRE(r.exit_code == 0);
    REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("not colorable"));
}

TEST_CASE("vn-enum command") {
    auto jpath = tmp_dir() / "vn.json";
    auto r = run("vn-enum --a 6 --b 2 --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    auto j = load_and_validate(jpath);
    REQUIRE(j["count"] == 3);
}

TEST_CASE("ets command with claims") {
    auto m = write_fixture_file("table1-g6-n5");
    auto jpath = tmp_dir() / "ets.json";
    auto r = run("ets --matrix " + m + " --a-max 6 --b-max 4 --claim 5:4 --claim 6:2 --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    auto j = load_and_validate(jpath);
    REQUIRE(j["status"] == "found");  // the (1,4) singletons are records
    REQUIRE(j["expansions"].get<long long>() > 0);

    // planted (7,4): the claim fails
    auto bad = tmp_dir() / "bad74.txt";
    std::ofstream(bad) << qcl::print_exponent_matrix(qcl_test::matrix_with_74_ets());
    r = run("ets --matrix " + bad.string() + " --a-max 7 --b-max 4 --claim 7:4");
    REQUIRE(r.exit_code == 1);

    // tiny budget: inconclusive
    r = run("ets --matrix " + m + " --a-max 6 --b-max 4 --budget 10");
    REQUIRE(r.exit_code == 3);
}

TEST_CASE("search command exit codes") {
    auto jpath = tmp_dir() / "search.json";
    auto r = run("search --n 5 --profile girth6-basic --N-min 4 --N-max 4 --json " + jpath.string());
    REQUIRE(r.exit_code == 1);  // exhausted
    auto j = load_and_validate(jpath);
    REQUIRE(j["status"] == "exhausted");

    auto out_m = tmp_dir() / "found.txt";
    r = run("search --n 5 --profile girth6-ets-free --N-min 2 --N-max 13 --out " + out_m.string() +
            " --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    j = load_and_validate(jpath);
    REQUIRE(j["status"] == "found");
    auto B = qcl::load_exponent_matrix(out_m.string());
    REQUIRE(qcl::check_profile(B, qcl::profile_by_name("girth6-ets-free")).pass);

    r = run("search --n 5 --profile girth6-ets-free --N-min 13 --N-max 13 --budget 20");
    REQUIRE(r.exit_code == 3);
}

TEST_CASE("lift exports alist that re-imports to the same graph") {
    auto m = write_fixture_file("table1-g6-n5");
    auto apath = tmp_dir() / "g6n5.alist";
    auto r = run("lift --matrix " + m + " --out " + apath.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(apath);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto R = qcl::parse_alist(buf.str());
    auto G = qcl::lift(qcl::fixture_by_name("table1-g6-n5").matrix);
    REQUIRE(R.var_adj == G.var_adj);
}

TEST_CASE("shipped data files match the embedded fixtures") {
    for (const auto& f : qcl::table1_fixtures()) {
        auto B = qcl::load_exponent_matrix(std::string(QCL_DATA_DIR) + "/" + f.name + ".txt");
        REQUIRE(B == f.matrix);
    }
}

TEST_CASE("verify-table1 single fixture with schema-valid JSON") {
    auto jpath = tmp_dir() / "verify.json";
    auto r = run("verify-table1 --fixture table1-g6-n5 --json " + jpath.string());
    REQUIRE(r.exit_code == 0);
    auto j = load_and_validate(jpath);
    REQUIRE(j["pass"] == true);
    REQUIRE(j["fixtures"].size() == 1);
    for (const auto& c : j["fixtures"][0]["claims"]) REQUIRE(c["pass"] == true);
    // worker count must not change the verdict
    REQUIRE(run("verify-table1 --fixture table1-g8-n5 --threads 4").exit_code == 0);
}
