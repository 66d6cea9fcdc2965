// qcl: construct and certify column-weight-4 quasi-cyclic LDPC exponent
// matrices. Subcommands cover lifting, girth, cycle enumeration, constraint
// profiles, trapping-set certificates, VN-graph enumeration, edge-coloring
// search, matrix search and the bundled reference fixtures.
//
// Exit codes: 0 pass/success, 1 fail or violation found, 2 usage error,
// 3 inconclusive (budget exhausted).

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qcl/qcl.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

void write_json(const std::string& path, const qcl::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write JSON report to " + path);
    out << j.dump(2) << '\n';
}

qcl::ExponentMatrix load_matrix(const std::string& path) { return qcl::load_exponent_matrix(path); }

qcl::VnGraph load_graph(const std::string& arg) {
    for (const char* tag : {"K5", "K34", "octahedron", "type1", "type2"})
        if (arg == tag) return qcl::builtin_vn_graph(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("not a builtin graph tag and cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return qcl::parse_vn_graph(buf.str());
}

std::string girth_str(std::optional<int> g, int cap) {
    return g ? std::to_string(*g) : ">=" + std::to_string(cap);
}

int cmd_lift(const std::string& matrix_path, const std::string& out_path) {
    auto B = load_matrix(matrix_path);
    auto G = qcl::lift(B);
    std::string alist = qcl::to_alist(G);
    if (out_path.empty()) {
        std::cout << alist;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << alist;
        std::cout << "lifted " << B.rows << "x" << B.cols << " N=" << B.lift << " -> " << G.num_vars()
                  << " variables, " << G.num_checks() << " checks, alist written to " << out_path << "\n";
    }
    return kExitPass;
}

int cmd_girth(const std::string& matrix_path, int cap, const std::string& method,
              const std::string& json_path) {
    auto B = load_matrix(matrix_path);
    std::optional<int> eg, bg;
    if (method == "exponent" || method == "both") eg = qcl::exponent_girth(B, cap);
    if (method == "bfs" || method == "both") bg = qcl::bfs_girth(qcl::lift(B), cap);
    if (method == "both") {
        std::cout << "exponent girth: " << girth_str(eg, cap) << "\n";
        std::cout << "bfs girth:      " << girth_str(bg, cap) << "\n";
        if (eg != bg) {
            std::cout << "MISMATCH between the two girth routes\n";
            write_json(json_path, qcl::girth_report(B, eg, bg, cap));
            return kExitFail;
        }
    } else {
        std::cout << "girth: " << girth_str(method == "bfs" ? bg : eg, cap) << "\n";
    }
    if (!json_path.empty()) {
        if (!eg) eg = qcl::exponent_girth(B, cap);
        if (!bg) bg = qcl::bfs_girth(qcl::lift(B), cap);
        write_json(json_path, qcl::girth_report(B, eg, bg, cap));
    }
    return kExitPass;
}

int cmd_cycles(const std::string& matrix_path, int k, const std::string& json_path) {
    auto B = load_matrix(matrix_path);
    auto ws = qcl::enumerate_cycle_solutions(B, k);
    std::cout << ws.size() << " canonical solutions of length " << 2 * k << "\n";
    for (const auto& w : ws) {
        std::cout << "  ";
        for (const auto& s : w.slots) std::cout << "(" << s.row + 1 << "," << s.col + 1 << ")";
        std::cout << "\n";
    }
    write_json(json_path, qcl::cycles_report(B, k, ws));
    return kExitPass;
}

int cmd_profile_check(const std::string& matrix_path, const std::string& profile,
                      const std::string& json_path) {
    auto B = load_matrix(matrix_path);
    const auto& prof = qcl::profile_by_name(profile);
    auto rep = qcl::check_profile(B, prof);
    std::cout << "profile " << prof.name << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
    std::cout << "  girth: " << girth_str(rep.girth, prof.girth_floor + 2) << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << c.constraint << ": "
                  << (c.status == qcl::CheckStatus::Pass   ? "pass"
                      : c.status == qcl::CheckStatus::Fail ? "FAIL (" + std::to_string(c.count) + " solutions)"
                                                           : "skipped")
                  << "\n";
    }
    write_json(json_path, qcl::profile_report_json(B, rep));
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_search(int n, const std::string& profile, int N_min, int N_max, const std::string& seed_file,
               uint64_t random_seed, long long budget, const std::string& engine, bool no_normalize,
               const std::string& out_matrix, const std::string& json_path) {
    qcl::SearchConfig cfg;
    cfg.n = n;
    cfg.profile = qcl::profile_by_name(profile);
    cfg.N_min = N_min;
    cfg.N_max = N_max;
    cfg.random_seed = random_seed;
    cfg.budget = budget;
    cfg.normalize = !no_normalize;
    cfg.engine = engine == "random" ? qcl::SearchConfig::Engine::Random : qcl::SearchConfig::Engine::Complete;
    if (!seed_file.empty()) {
        auto S = qcl::load_exponent_matrix(seed_file);
        if (S.rows != 3 || S.cols != n) throw std::runtime_error("seed file must be a 3 x n matrix");
        cfg.seed_rows = S.entries;
    }
    auto out = qcl::search(cfg);
    write_json(json_path, qcl::search_report(cfg, out));
    switch (out.status) {
        case qcl::SearchOutcome::Status::Found:
            std::cout << "found N=" << out.N << " after " << out.expansions << " expansions\n";
            std::cout << qcl::print_exponent_matrix(*out.matrix);
            if (!out_matrix.empty()) {
                std::ofstream f(out_matrix);
                if (!f) throw std::runtime_error("cannot write " + out_matrix);
                f << qcl::print_exponent_matrix(*out.matrix);
            }
            return kExitPass;
        case qcl::SearchOutcome::Status::Exhausted:
            std::cout << "exhausted: no matrix in N range [" << N_min << ", " << N_max << "]\n";
            return kExitFail;
        case qcl::SearchOutcome::Status::Budget:
            std::cout << "budget exhausted after " << out.expansions << " expansions (inconclusive)\n";
            return kExitInconclusive;
    }
    return kExitUsage;
}

int cmd_ets(const std::string& matrix_path, int a_max, int b_max, bool expand_orbits, int threads,
            long long budget, const std::vector<std::string>& claims, const std::string& json_path) {
    auto B = load_matrix(matrix_path);
    auto G = qcl::lift(B);
    qcl::EtsQuery q;
    q.a_max = a_max;
    q.b_max = b_max;
    q.expand_orbits = expand_orbits;
    q.threads = threads;
    q.budget = budget;
    auto eg = qcl::exponent_girth(B, 10);
    q.girth_context = (!eg || *eg >= 8) ? 8 : 6;
    auto cert = qcl::find_ets(G, q);
    write_json(json_path, qcl::ets_report(B, G, q, cert));

    const char* status = cert.status == qcl::EtsCertificate::Status::Free    ? "free"
                         : cert.status == qcl::EtsCertificate::Status::Found ? "found"
                                                                             : "inconclusive";
    std::cout << "status: " << status << " (" << cert.records.size() << " records, " << cert.expansions
              << " expansions)\n";
    std::map<std::pair<int, int>, int> by_ab;
    for (const auto& r : cert.records) ++by_ab[{r.a, r.b}];
    for (const auto& [ab, cnt] : by_ab)
        std::cout << "  (" << ab.first << "," << ab.second << "): " << cnt << "\n";

    if (cert.status == qcl::EtsCertificate::Status::Inconclusive) return kExitInconclusive;
    if (claims.empty()) return cert.records.empty() ? kExitPass : kExitFail;
    bool ok = true;
    for (const auto& c : claims) {
        auto colon = c.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--claim", "expected a:b");
        int ca = std::stoi(c.substr(0, colon));
        int cb = std::stoi(c.substr(colon + 1));
        long hits = 0;
        for (const auto& r : cert.records)
            if (r.a == ca && r.b <= cb) ++hits;
        std::cout << "claim no-(" << ca << ",b<=" << cb << "): " << (hits == 0 ? "pass" : "FAIL") << "\n";
        ok = ok && hits == 0;
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_vn_enum(int a, int b, int gamma, int girth, const std::string& json_path) {
    auto gs = qcl::enumerate_vn_graphs(a, b, gamma, girth);
    std::cout << gs.size() << " non-isomorphic graphs for (a=" << a << ", b=" << b << ", gamma=" << gamma
              << ", girth " << girth << ")\n";
    for (const auto& g : gs) {
        std::cout << "  degrees [";
        auto d = g.degree_sequence();
        for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
        std::cout << "] edges";
        auto es = g.edges;
        std::sort(es.begin(), es.end());
        for (const auto& [u, v] : es) std::cout << " " << u << "-" << v;
        std::cout << "\n";
    }
    write_json(json_path, qcl::vn_enum_report(a, b, gamma, girth, gs));
    return kExitPass;
}

int cmd_color(const std::string& graph_arg, int colors, const std::vector<std::string>& tri_args,
              const std::vector<std::string>& quad_args, const std::string& mode,
              const std::string& json_path) {
    auto g = load_graph(graph_arg);
    std::vector<qcl::TrianglePattern> tris;
    for (const auto& t : tri_args) {
        int a, b, c;
        if (sscanf(t.c_str(), "%d,%d,%d", &a, &b, &c) != 3)
            throw CLI::ValidationError("--forbid-tri", "expected three colors a,b,c");
        tris.emplace_back(a, b, c);
    }
    std::vector<qcl::QuadPattern> quads;
    for (const auto& qarg : quad_args) {
        int d, r;
        if (sscanf(qarg.c_str(), "%d,%d", &d, &r) != 2)
            throw CLI::ValidationError("--forbid-quad", "expected two colors d,r");
        quads.emplace_back(d, r);
    }
    long long count;
    bool exists_mode = mode == "exists";
    if (exists_mode)
        count = qcl::exists_constrained_coloring(g, colors, tris, quads) ? 1 : 0;
    else
        count = qcl::count_constrained_colorings(g, colors, tris, quads);
    if (exists_mode)
        std::cout << (count ? "colorable" : "not colorable") << "\n";
    else
        std::cout << count << "\n";
    write_json(json_path, qcl::color_report(g, colors, count, exists_mode));
    return kExitPass;
}

int cmd_verify_table1(bool all, const std::string& fixture, int threads, long long budget,
                      const std::string& json_path) {
    std::vector<qcl::FixtureReport> reps;
    if (all) {
        for (const auto& f : qcl::table1_fixtures()) reps.push_back(qcl::verify_fixture(f, threads, budget));
    } else {
        reps.push_back(qcl::verify_fixture(qcl::fixture_by_name(fixture), threads, budget));
    }
    bool pass = true, inconclusive = false;
    for (const auto& r : reps) {
        std::cout << r.fixture << ": " << (r.pass ? "pass" : r.inconclusive ? "INCONCLUSIVE" : "FAIL") << "\n";
        for (const auto& c : r.claims)
            std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " [" << c.detail << "]\n";
        pass = pass && r.pass;
        inconclusive = inconclusive || r.inconclusive;
    }
    write_json(json_path, qcl::verify_table1_report(reps));
    if (inconclusive) return kExitInconclusive;
    return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for column-weight-4 QC-LDPC exponent matrices: girth and cycle analysis, "
                 "elementary trapping-set certificates, VN-graph edge coloring, constrained matrix search"};
    app.require_subcommand(1);

    std::string matrix_path, json_path, out_path, method = "both", profile, engine = "complete";
    std::string graph_arg, mode = "count", fixture, seed_file, out_matrix;
    int cap = 12, k = 3, n = 5, N_min = 2, N_max = 13, a_max = 6, b_max = 4, a = 5, b = 4, gamma = 4;
    int girth_floor = 6, colors = 4, threads = 1;
    long long budget = 200'000'000, ets_budget = 1'000'000'000;
    uint64_t random_seed = 0;
    bool expand_orbits = false, no_normalize = false, all_fixtures = false;
    std::vector<std::string> tri_args, quad_args, claims;

    auto* lift_cmd = app.add_subcommand("lift", "lift an exponent matrix and export the Tanner graph as alist");
    lift_cmd->add_option("--matrix", matrix_path, "exponent matrix file")->required();
    lift_cmd->add_option("--out", out_path, "alist output file (stdout when omitted)");

    auto* girth_cmd = app.add_subcommand("girth", "girth of the lifted Tanner graph");
    girth_cmd->add_option("--matrix", matrix_path, "exponent matrix file")->required();
    girth_cmd->add_option("--cap", cap, "report girth >= cap instead of searching further")
        ->check(CLI::Range(4, 14));
    girth_cmd->add_option("--method", method, "exponent | bfs | both")
        ->check(CLI::IsMember({"exponent", "bfs", "both"}));
    girth_cmd->add_option("--json", json_path, "write a JSON report");

    auto* cycles_cmd = app.add_subcommand("cycles", "enumerate canonical cycle solutions of length 2k");
    cycles_cmd->add_option("--matrix", matrix_path, "exponent matrix file")->required();
    cycles_cmd->add_option("--k", k, "half cycle length, 2..6")->check(CLI::Range(2, 6));
    cycles_cmd->add_option("--json", json_path, "write a JSON report");

    auto* prof_cmd = app.add_subcommand("profile-check", "check a matrix against a constraint profile");
    prof_cmd->add_option("--matrix", matrix_path, "exponent matrix file")->required();
    prof_cmd->add_option("--profile", profile, "girth6-basic | girth6-ets-free | girth8-basic | girth8-ets-free")
        ->required();
    prof_cmd->add_option("--json", json_path, "write a JSON report");

    auto* search_cmd = app.add_subcommand("search", "search for a matrix satisfying a profile");
    search_cmd->add_option("--n", n, "columns")->required();
    search_cmd->add_option("--profile", profile, "constraint profile")->required();
    search_cmd->add_option("--N-min", N_min, "smallest lifting degree");
    search_cmd->add_option("--N-max", N_max, "largest lifting degree");
    search_cmd->add_option("--seed-rows", seed_file, "3 x n matrix file fixing rows 1..3");
    search_cmd->add_option("--random-seed", random_seed, "seed for the randomized engine");
    search_cmd->add_option("--budget", budget, "total placement budget");
    search_cmd->add_option("--engine", engine, "complete | random")
        ->check(CLI::IsMember({"complete", "random"}));
    search_cmd->add_flag("--no-normalize", no_normalize, "do not pin the first row and column to zero");
    search_cmd->add_option("--out", out_matrix, "write the found matrix to a file");
    search_cmd->add_option("--json", json_path, "write a JSON report");

    auto* ets_cmd = app.add_subcommand("ets", "exhaustive elementary trapping-set certificate");
    ets_cmd->add_option("--matrix", matrix_path, "exponent matrix file")->required();
    ets_cmd->add_option("--a-max", a_max, "largest subset size")->check(CLI::Range(1, 8));
    ets_cmd->add_option("--b-max", b_max, "largest number of odd checks");
    ets_cmd->add_flag("--expand-orbits", expand_orbits, "emit all quasi-cyclic shifts of each record");
    ets_cmd->add_option("--threads", threads, "parallel workers over root branches");
    ets_cmd->add_option("--budget", ets_budget, "expansion budget before reporting inconclusive");
    ets_cmd->add_option("--claim", claims, "a:b pairs; fail when an (a, b'<=b) record exists");
    ets_cmd->add_option("--json", json_path, "write a JSON certificate");

    auto* vn_cmd = app.add_subcommand("vn-enum", "enumerate candidate VN graphs for (a, b)");
    vn_cmd->add_option("--a", a, "variable nodes")->required()->check(CLI::Range(1, 8));
    vn_cmd->add_option("--b", b, "odd-degree checks")->required();
    vn_cmd->add_option("--gamma", gamma, "column weight");
    vn_cmd->add_option("--girth", girth_floor, "ambient girth, 6 or 8")->check(CLI::IsMember({6, 8}));
    vn_cmd->add_option("--json", json_path, "write a JSON report");

    auto* color_cmd = app.add_subcommand("color", "count or test constrained proper edge colorings");
    color_cmd->add_option("--graph", graph_arg, "builtin tag (K5, K34, octahedron, type1, type2) or file")
        ->required();
    color_cmd->add_option("--colors", colors, "palette size, at most 6")->required()->check(CLI::Range(0, 6));
    color_cmd->add_option("--forbid-tri", tri_args, "forbidden triangle color set a,b,c (repeatable)");
    color_cmd->add_option("--forbid-quad", quad_args, "forbidden 4-cycle pattern d,r (repeatable)");
    color_cmd->add_option("--mode", mode, "count | exists")->check(CLI::IsMember({"count", "exists"}));
    color_cmd->add_option("--json", json_path, "write a JSON report");

    auto* verify_cmd = app.add_subcommand("verify-table1", "re-verify the bundled reference matrices");
    verify_cmd->add_flag("--all", all_fixtures, "verify all six fixtures");
    verify_cmd->add_option("--fixture", fixture, "single fixture name, e.g. table1-g6-n5");
    verify_cmd->add_option("--threads", threads, "parallel workers for the trapping-set search");
    verify_cmd->add_option("--budget", ets_budget, "trapping-set expansion budget");
    verify_cmd->add_option("--json", json_path, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*lift_cmd) return cmd_lift(matrix_path, out_path);
        if (*girth_cmd) return cmd_girth(matrix_path, cap, method, json_path);
        if (*cycles_cmd) return cmd_cycles(matrix_path, k, json_path);
        if (*prof_cmd) return cmd_profile_check(matrix_path, profile, json_path);
        if (*search_cmd)
            return cmd_search(n, profile, N_min, N_max, seed_file, random_seed, budget, engine, no_normalize,
                              out_matrix, json_path);
        if (*ets_cmd) return cmd_ets(matrix_path, a_max, b_max, expand_orbits, threads, ets_budget, claims, json_path);
        if (*vn_cmd) return cmd_vn_enum(a, b, gamma, girth_floor, json_path);
        if (*color_cmd) return cmd_color(graph_arg, colors, tri_args, quad_args, mode, json_path);
        if (*verify_cmd) {
            if (!all_fixtures && fixture.empty())
                throw CLI::ValidationError("verify-table1", "need --all or --fixture NAME");
            return cmd_verify_table1(all_fixtures, fixture, threads, ets_budget, json_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // internal inconsistency (cross-check assertions); not a usage problem
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
