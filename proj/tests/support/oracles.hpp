// Test-only oracles, kept independent of the library paths they check.
#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcl/ets.hpp"
#include "qcl/tanner_graph.hpp"
#include "qcl/vn_graph.hpp"

namespace qcl_test {

// ---- simple-cycle census on the lifted graph ------------------------------
//
// Enumerates simple cycles of exactly `length` edges by DFS over the union
// graph (variables then checks), counting each cycle once: smallest node
// first, direction fixed by second < last. Returns counts keyed by the
// sorted multiset of check row blocks on the cycle.

inline std::map<std::vector<int>, long> lifted_cycle_census(const qcl::TannerGraph& G, int length) {
    const int V = G.num_vars();
    const int total = V + G.num_checks();
    std::vector<std::vector<int>> adj(total);
    for (int v = 0; v < V; ++v)
        for (int c : G.var_adj[v]) {
            adj[v].push_back(V + c);
            adj[V + c].push_back(v);
        }
    std::map<std::vector<int>, long> counts;
    std::vector<int> path;
    std::vector<char> on_path(total, 0);
    auto dfs = [&](auto&& self, int start, int u, int edges_used) -> void {
        for (int w : adj[u]) {
            if (w == start) {
                if (edges_used + 1 == length && path[1] < path.back()) {
                    std::vector<int> blocks;
                    for (int x : path)
                        if (x >= V) blocks.push_back(G.chk_block(x - V));
                    std::sort(blocks.begin(), blocks.end());
                    ++counts[blocks];
                }
                continue;
            }
            if (edges_used + 1 < length && w > start && !on_path[w]) {
                path.push_back(w);
                on_path[w] = 1;
                self(self, start, w, edges_used + 1);
                on_path[w] = 0;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < total; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s, s, 0);
        on_path[s] = 0;
    }
    return counts;
}

// ---- brute-force VN-graph enumeration -------------------------------------
//
// Filters all 2^C(a,2) labeled graphs and deduplicates with a full
// permutation isomorphism test (no degree prefilter, no canonical codes), so
// it shares nothing with the library's generator.

inline bool iso_bruteforce(int a, const std::set<std::pair<int, int>>& ea,
                           const std::set<std::pair<int, int>>& eb) {
    if (ea.size() != eb.size()) return false;
    std::vector<int> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : ea) {
            int pu = perm[u], pv = perm[v];
            if (!eb.count({std::min(pu, pv), std::max(pu, pv)})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<std::set<std::pair<int, int>>> brute_force_vn_enumeration(int a, int b, int gamma,
                                                                             int girth_floor) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) all_edges.emplace_back(u, v);
    const int target = a * gamma - b;
    std::vector<std::set<std::pair<int, int>>> classes;
    if (target < 0 || target % 2) return classes;
    const size_t ne = target / 2;
    const uint32_t lim = 1u << all_edges.size();
    for (uint32_t mask = 0; mask < lim; ++mask) {
        if (static_cast<size_t>(std::popcount(mask)) != ne) continue;
        std::vector<int> deg(a, 0);
        std::set<std::pair<int, int>> es;
        for (size_t e = 0; e < all_edges.size(); ++e)
            if (mask >> e & 1) {
                es.insert(all_edges[e]);
                ++deg[all_edges[e].first];
                ++deg[all_edges[e].second];
            }
        if (*std::max_element(deg.begin(), deg.end()) > gamma) continue;
        // connectivity
        std::vector<char> seen(a, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : es) {
                int other = x == u ? y : y == u ? x : -1;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    ++reached;
                    stack.push_back(other);
                }
            }
        }
        if (reached != a) continue;
        if (girth_floor == 8) {
            bool tri = false;
            for (const auto& [u, v] : es)
                for (int w = 0; w < a && !tri; ++w)
                    if (w != u && w != v && es.count({std::min(u, w), std::max(u, w)}) &&
                        es.count({std::min(v, w), std::max(v, w)}))
                        tri = true;
            if (tri) continue;
        }
        bool fresh = true;
        for (const auto& cls : classes)
            if (iso_bruteforce(a, es, cls)) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(std::move(es));
    }
    return classes;
}

inline std::set<std::pair<int, int>> edge_set(const qcl::VnGraph& g) {
    return {g.edges.begin(), g.edges.end()};
}

// ---- minimal JSON-schema validator ----------------------------------------
//
// Supports the subset the shipped schema uses: type (string or list), const,
// enum, properties, required, items, additionalProperties, oneOf and
// "$ref": "#/definitions/...".

class SchemaValidator {
public:
    explicit SchemaValidator(nlohmann::json schema) : root_(std::move(schema)) {}

    bool validate(const nlohmann::json& value, std::string* why = nullptr) const {
        std::string local;
        bool ok = check(root_, value, local);
        if (!ok && why) *why = local;
        return ok;
    }

private:
    nlohmann::json root_;

    const nlohmann::json& resolve(const nlohmann::json& s) const {
        if (s.contains("$ref")) {
            std::string ref = s["$ref"];
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
            return root_.at("definitions").at(ref.substr(prefix.size()));
        }
        return s;
    }

    static bool type_matches(const std::string& t, const nlohmann::json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }

    bool check(const nlohmann::json& schema_in, const nlohmann::json& v, std::string& why) const {
        const nlohmann::json& s = resolve(schema_in);
        if (s.contains("const") && v != s["const"]) {
            why = "const mismatch";
            return false;
        }
        if (s.contains("enum")) {
            bool hit = false;
            for (const auto& e : s["enum"]) hit = hit || v == e;
            if (!hit) {
                why = "enum mismatch: " + v.dump();
                return false;
            }
        }
        if (s.contains("type")) {
            bool hit = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) hit = hit || type_matches(t, v);
            } else {
                hit = type_matches(s["type"], v);
            }
            if (!hit) {
                why = "type mismatch: " + v.dump().substr(0, 80);
                return false;
            }
        }
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.is_object() || !v.contains(r.get<std::string>())) {
                    why = "missing required field " + r.get<std::string>();
                    return false;
                }
        if (s.contains("properties") && v.is_object())
            for (auto it = s["properties"].begin(); it != s["properties"].end(); ++it)
                if (v.contains(it.key()))
                    if (!check(it.value(), v.at(it.key()), why)) {
                        why = it.key() + ": " + why;
                        return false;
                    }
        if (s.contains("additionalProperties") && s["additionalProperties"].is_object() && v.is_object()) {
            const auto& props = s.contains("properties") ? s["properties"] : nlohmann::json::object();
            for (auto it = v.begin(); it != v.end(); ++it)
                if (!props.contains(it.key()))
                    if (!check(s["additionalProperties"], it.value(), why)) {
                        why = it.key() + ": " + why;
                        return false;
                    }
        }
        if (s.contains("items") && v.is_array())
            for (const auto& item : v)
                if (!check(s["items"], item, why)) {
                    why = "item: " + why;
                    return false;
                }
        if (s.contains("oneOf")) {
            int hits = 0;
            for (const auto& branch : s["oneOf"]) {
                std::string ignore;
                if (check(branch, v, ignore)) ++hits;
            }
            if (hits != 1) {
                why = "oneOf matched " + std::to_string(hits) + " branches";
                return false;
            }
        }
        return true;
    }
};

// ---- hub-based (7,4) oracle ------------------------------------------------
//
// In a girth-8 graph a (7,4) elementary trapping set has the complete
// bipartite K_{3,4} as its VN graph, so it contains a variable of VN-degree 4
// whose four neighbors all lie in the set. Enumerating every variable v, every
// 4-subset of the variables sharing a check with v, and every pair of common
// partners is therefore exhaustive for (7,4) while staying far cheaper than
// classifying all C(n*N, 7) subsets.

inline std::set<std::vector<int>> hub_74_oracle(const qcl::TannerGraph& G) {
    const int V = G.num_vars();
    std::vector<std::set<int>> h(V);
    for (const auto& vs : G.chk_adj)
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                h[vs[i]].insert(vs[j]);
                h[vs[j]].insert(vs[i]);
            }
    std::set<std::vector<int>> found;
    std::vector<int> nb;
    for (int v = 0; v < V; ++v) {
        nb.assign(h[v].begin(), h[v].end());
        const int d = static_cast<int>(nb.size());
        std::vector<int> idx(4);
        for (idx[0] = 0; idx[0] < d; ++idx[0])
            for (idx[1] = idx[0] + 1; idx[1] < d; ++idx[1])
                for (idx[2] = idx[1] + 1; idx[2] < d; ++idx[2])
                    for (idx[3] = idx[2] + 1; idx[3] < d; ++idx[3]) {
                        std::set<int> common;
                        bool first = true;
                        for (int k = 0; k < 4 && (first || common.size() >= 2); ++k) {
                            const auto& hn = h[nb[idx[k]]];
                            if (first) {
                                common = hn;
                                first = false;
                            } else {
                                std::set<int> next;
                                for (int x : common)
                                    if (hn.count(x)) next.insert(x);
                                common = std::move(next);
                            }
                        }
                        common.erase(v);
                        for (int k = 0; k < 4; ++k) common.erase(nb[idx[k]]);
                        if (common.size() < 2) continue;
                        std::vector<int> cs(common.begin(), common.end());
                        for (size_t x = 0; x < cs.size(); ++x)
                            for (size_t y = x + 1; y < cs.size(); ++y) {
                                std::vector<int> S{v, nb[idx[0]], nb[idx[1]], nb[idx[2]], nb[idx[3]],
                                                   cs[x], cs[y]};
                                auto rec = qcl::classify_subset(G, S);
                                if (rec.a == 7 && rec.b == 4 && rec.elementary) found.insert(rec.subset);
                            }
                    }
    }
    return found;
}

// ---- shared test fixtures --------------------------------------------------

/// A girth-8 matrix built to contain a (7, 4) elementary trapping set whose
/// VN graph is K_{3,4}; the embedded subset is listed as flat variable ids.
inline qcl::ExponentMatrix matrix_with_74_ets() {
    return qcl::parse_exponent_matrix(
        "4 5 41\n"
        "0 0 0 0 0\n"
        "0 11 32 6 18\n"
        "0 22 34 3 1\n"
        "0 9 7 26 35\n");
}

inline std::vector<int> embedded_74_subset() { return {35, 54, 76, 110, 136, 141, 192}; }

}  // namespace qcl_test
