#pragma once

#include <string>

#include <json.hpp>

#include "qcl/ets.hpp"
#include "qcl/fixtures.hpp"
#include "qcl/matrix_search.hpp"
#include "qcl/profiles.hpp"
#include "qcl/vn_graph.hpp"

namespace qcl {

inline constexpr int kReportSchemaVersion = 1;

using json = nlohmann::json;

/// Rows and columns are 1-based in every report, matching the row names the
/// constraint profiles are stated with.
inline json witness_json(const CycleWitness& w) {
    json slots = json::array();
    for (const auto& s : w.slots) slots.push_back({s.row + 1, s.col + 1});
    return json{{"length", w.length()}, {"slots", slots}};
}

inline json matrix_json(const ExponentMatrix& B) {
    json rows = json::array();
    for (int i = 0; i < B.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < B.cols; ++j) r.push_back(B.at(i, j));
        rows.push_back(r);
    }
    return json{{"m", B.rows}, {"n", B.cols}, {"N", B.lift}, {"rows", rows}};
}

inline json report_root(const std::string& command) {
    return json{{"schema_version", kReportSchemaVersion}, {"command", command}};
}

inline std::string row_set_key(const std::array<int, 3>& rs) {
    return "{" + std::to_string(rs[0] + 1) + "," + std::to_string(rs[1] + 1) + "," +
           std::to_string(rs[2] + 1) + "}";
}

inline json girth_report(const ExponentMatrix& B, std::optional<int> exponent,
                         std::optional<int> bfs, int cap) {
    json j = report_root("girth");
    j["matrix"] = matrix_json(B);
    j["cap"] = cap;
    j["exponent_girth"] = exponent ? json(*exponent) : json(">=" + std::to_string(cap));
    j["bfs_girth"] = bfs ? json(*bfs) : json(">=" + std::to_string(cap));
    j["agree"] = exponent == bfs;
    return j;
}

inline json cycles_report(const ExponentMatrix& B, int k, const std::vector<CycleWitness>& ws) {
    json j = report_root("cycles");
    j["matrix"] = matrix_json(B);
    j["k"] = k;
    j["count"] = ws.size();
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(witness_json(w));
    j["witnesses"] = arr;
    return j;
}

/// Profile report in the stable layout: measured girth, per-length pattern
/// counts, overall verdict and the first witness per violated constraint.
inline json profile_report_json(const ExponentMatrix& B, const ProfileReport& rep) {
    json j = report_root("profile-check");
    j["matrix"] = matrix_json(B);
    j["profile"] = rep.profile;
    j["pass"] = rep.pass;
    const auto& prof = profile_by_name(rep.profile);
    j["girth"] = rep.girth ? json(*rep.girth) : json(">=" + std::to_string(prof.girth_floor + 2));

    json counts = json::object();
    counts["4"] = enumerate_cycle_solutions(B, 2).size();
    json six = json::object(), eight = json::object();
    for (const auto& c : rep.checks) {
        if (c.constraint.rfind("no-6cycle", 0) == 0 && c.status != CheckStatus::Skipped)
            six[c.constraint.substr(9)] = c.count;
        if (c.constraint.rfind("no-8cycle-doubled", 0) == 0 && c.status != CheckStatus::Skipped)
            eight[c.constraint.substr(17)] = c.count;
    }
    counts["6"] = six;
    counts["8"] = eight;
    j["counts"] = counts;

    json checks = json::array();
    json witnesses = json::array();
    for (const auto& c : rep.checks) {
        json e{{"constraint", c.constraint},
               {"status", c.status == CheckStatus::Pass   ? "pass"
                          : c.status == CheckStatus::Fail ? "fail"
                                                          : "skipped"}};
        if (c.witness) {
            e["witness"] = witness_json(*c.witness);
            witnesses.push_back(witness_json(*c.witness));
        }
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["witnesses"] = witnesses;
    return j;
}

inline json ets_record_json(const EtsRecord& r, const TannerGraph& G) {
    json subset = json::array();
    for (int v : r.subset) subset.push_back({{"id", v}, {"block", G.var_block(v)}, {"offset", G.var_offset(v)}});
    json edges = json::array();
    for (size_t i = 0; i < r.vn_graph.edges.size(); ++i) {
        auto [u, v] = r.vn_graph.edges[i];
        edges.push_back({{"u", u}, {"v", v}, {"row", r.edge_rows[i] + 1}});
    }
    return json{{"subset", subset},
                {"a", r.a},
                {"b", r.b},
                {"elementary", r.elementary},
                {"vn_edges", edges}};
}

inline json ets_report(const ExponentMatrix& B, const TannerGraph& G, const EtsQuery& q,
                       const EtsCertificate& cert) {
    json j = report_root("ets");
    j["matrix"] = matrix_json(B);
    j["query"] = {{"a_max", q.a_max}, {"b_max", q.b_max}, {"elementary_only", q.elementary_only}};
    j["status"] = cert.status == EtsCertificate::Status::Free    ? "free"
                  : cert.status == EtsCertificate::Status::Found ? "found"
                                                                 : "inconclusive";
    json recs = json::array();
    for (const auto& r : cert.records) recs.push_back(ets_record_json(r, G));
    j["records"] = recs;
    j["expansions"] = cert.expansions;
    return j;
}

inline json search_report(const SearchConfig& cfg, const SearchOutcome& out) {
    json j = report_root("search");
    j["n"] = cfg.n;
    j["profile"] = cfg.profile.name;
    j["N_range"] = {cfg.N_min, cfg.N_max};
    j["engine"] = cfg.engine == SearchConfig::Engine::Complete ? "complete" : "random";
    j["random_seed"] = cfg.random_seed;
    j["status"] = out.status == SearchOutcome::Status::Found       ? "found"
                  : out.status == SearchOutcome::Status::Exhausted ? "exhausted"
                                                                   : "budget";
    if (out.matrix) {
        j["matrix"] = matrix_json(*out.matrix);
        j["N"] = out.N;
    }
    j["stats"] = {{"expansions", out.expansions}, {"restarts", out.restarts}};
    return j;
}

inline json vn_graph_json(const VnGraph& g) {
    json edges = json::array();
    auto es = g.edges;
    std::sort(es.begin(), es.end());
    for (const auto& [u, v] : es) edges.push_back({u, v});
    json j{{"order", g.order}, {"edges", edges}, {"degree_sequence", g.degree_sequence()}};
    if (!g.tag.empty()) j["tag"] = g.tag;
    return j;
}

inline json vn_enum_report(int a, int b, int gamma, int girth_floor, const std::vector<VnGraph>& gs) {
    json j = report_root("vn-enum");
    j["a"] = a;
    j["b"] = b;
    j["gamma"] = gamma;
    j["girth"] = girth_floor;
    j["count"] = gs.size();
    json arr = json::array();
    for (const auto& g : gs) arr.push_back(vn_graph_json(g));
    j["graphs"] = arr;
    return j;
}

inline json color_report(const VnGraph& g, int colors, long long count, bool exists_mode) {
    json j = report_root("color");
    j["graph"] = vn_graph_json(g);
    j["colors"] = colors;
    j["mode"] = exists_mode ? "exists" : "count";
    if (exists_mode)
        j["exists"] = count > 0;
    else
        j["count"] = count;
    return j;
}

inline json fixture_report_json(const FixtureReport& rep) {
    json claims = json::array();
    for (const auto& c : rep.claims)
        claims.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"fixture", rep.fixture},
                {"pass", rep.pass},
                {"inconclusive", rep.inconclusive},
                {"claims", claims},
                {"ets_expansions", rep.ets_expansions}};
}

inline json verify_table1_report(const std::vector<FixtureReport>& reps) {
    json j = report_root("verify-table1");
    bool pass = true;
    json arr = json::array();
    for (const auto& r : reps) {
        arr.push_back(fixture_report_json(r));
        pass = pass && r.pass;
    }
    j["fixtures"] = arr;
    j["pass"] = pass;
    return j;
}

}  // namespace qcl
