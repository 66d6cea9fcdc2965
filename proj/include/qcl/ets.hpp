#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qcl/tanner_graph.hpp"
#include "qcl/vn_graph.hpp"

namespace qcl {

struct EtsQuery {
    int a_max = 8;
    int b_max = 4;
    bool elementary_only = true;
    int girth_context = 6;  ///< 6 or 8; drives structural assertions on records
    long long budget = 1'000'000'000;
    bool expand_orbits = false;
    int threads = 1;
};

/// Full classification of one variable subset: trapping-set parameters, the
/// incident checks by induced degree, and the VN graph with edges labeled by
/// check row block. VN-graph vertex i is subset[i] (subset kept sorted).
struct EtsRecord {
    std::vector<int> subset;
    int a = 0;
    int b = 0;
    bool elementary = false;
    std::vector<std::pair<int, int>> satisfied_checks;  ///< (check id, row block), degree exactly 2
    std::vector<int> odd_checks;                        ///< odd induced degree (degree 1 when elementary)
    VnGraph vn_graph;
    std::vector<int> edge_rows;  ///< row block per vn_graph.edges entry
};

inline EtsRecord classify_subset(const TannerGraph& G, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("classify_subset: empty subset");
    EtsRecord rec;
    rec.subset.assign(subset.begin(), subset.end());
    std::sort(rec.subset.begin(), rec.subset.end());
    rec.subset.erase(std::unique(rec.subset.begin(), rec.subset.end()), rec.subset.end());
    for (int v : rec.subset)
        if (v < 0 || v >= G.num_vars()) throw std::invalid_argument("classify_subset: variable id out of range");
    rec.a = static_cast<int>(rec.subset.size());

    std::map<int, std::vector<int>> touched;  // check -> member positions
    for (int pos = 0; pos < rec.a; ++pos)
        for (int c : G.var_adj[rec.subset[pos]]) touched[c].push_back(pos);

    rec.elementary = true;
    if (rec.a <= VnGraph::kMaxOrder) rec.vn_graph = VnGraph(rec.a);
    for (const auto& [c, members] : touched) {
        int deg = static_cast<int>(members.size());
        if (deg % 2) rec.odd_checks.push_back(c);
        if (deg > 2) rec.elementary = false;
        if (deg == 2) {
            rec.satisfied_checks.emplace_back(c, G.chk_block(c));
            if (rec.a <= VnGraph::kMaxOrder && !rec.vn_graph.has_edge(members[0], members[1])) {
                rec.vn_graph.add_edge(members[0], members[1]);
                rec.edge_rows.push_back(G.chk_block(c));
            }
        }
    }
    rec.b = static_cast<int>(rec.odd_checks.size());

    // row labels must properly edge-color the VN graph: each variable meets
    // each row block exactly once, so two edges at one vertex cannot share a row
    for (size_t i = 0; i < rec.vn_graph.edges.size(); ++i)
        for (size_t j = i + 1; j < rec.vn_graph.edges.size(); ++j) {
            auto [a1, b1] = rec.vn_graph.edges[i];
            auto [a2, b2] = rec.vn_graph.edges[j];
            bool share = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
            if (share && rec.edge_rows[i] == rec.edge_rows[j])
                throw std::logic_error("classify_subset: row labels do not properly color the VN graph");
        }
    return rec;
}

struct EtsCertificate {
    enum class Status { Free, Found, Inconclusive };
    Status status = Status::Free;
    std::vector<EtsRecord> records;  ///< orbit representatives unless expand_orbits
    long long expansions = 0;
};

namespace detail {

/// Lexicographically smallest image of a sorted subset under the N cyclic
/// shifts of all offsets; the orbit identity used for deduplication.
inline std::vector<int> orbit_canonical(std::span<const int> subset, int N) {
    std::vector<int> best, cur(subset.size());
    for (int c = 0; c < N; ++c) {
        for (size_t i = 0; i < subset.size(); ++i)
            cur[i] = subset[i] / N * N + (subset[i] + c) % N;
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

struct EtsSearchContext {
    const TannerGraph* G = nullptr;
    const std::vector<std::vector<int>>* nbrs = nullptr;  // shares->=1-check adjacency
    int a_max = 0, b_max = 0;
    int col_weight = 0;  ///< m; each added variable converts at most m odd checks
    long long budget = 0;
    std::atomic<long long>* expansions = nullptr;
    std::atomic<bool>* over_budget = nullptr;

    std::vector<int> chk_deg;
    std::vector<int> members;
    std::vector<uint8_t> visited;
    int b_cur = 0;
    std::set<std::vector<int>> found;  // orbit-canonical subsets
    long long local_expansions = 0;

    bool spend() {
        if (++local_expansions % 4096 == 0) {
            expansions->fetch_add(4096, std::memory_order_relaxed);
            if (expansions->load(std::memory_order_relaxed) > budget) {
                over_budget->store(true, std::memory_order_relaxed);
            }
        }
        return !over_budget->load(std::memory_order_relaxed);
    }

    /// Add v if no incident check would exceed degree 2. Updates b.
    bool try_add(int v) {
        const auto& cs = G->var_adj[v];
        for (size_t i = 0; i < cs.size(); ++i) {
            int d = chk_deg[cs[i]];
            if (d >= 2) {  // roll back the partial update
                for (size_t j = 0; j < i; ++j) {
                    int& dj = chk_deg[cs[j]];
                    b_cur += (dj == 2) ? 1 : -1;
                    --dj;
                }
                return false;
            }
            b_cur += (d == 0) ? 1 : -1;
            ++chk_deg[cs[i]];
        }
        members.push_back(v);
        return true;
    }

    void remove_last() {
        int v = members.back();
        members.pop_back();
        for (int c : G->var_adj[v]) {
            int& d = chk_deg[c];
            b_cur += (d == 2) ? 1 : -1;
            --d;
        }
    }

    void record_if_qualifies() {
        if (b_cur <= b_max) found.insert(orbit_canonical(members, G->lift));
    }

    void extend(int root, std::vector<int> ext) {
        record_if_qualifies();
        if (static_cast<int>(members.size()) == a_max) return;
        for (size_t idx = 0; idx < ext.size(); ++idx) {
            int w = ext[idx];
            if (!spend()) return;
            if (!try_add(w)) continue;
            // b can drop by at most m per added variable
            if (b_cur - col_weight * (a_max - static_cast<int>(members.size())) > b_max) {
                remove_last();
                continue;
            }
            std::vector<int> next(ext.begin() + idx + 1, ext.end());
            std::vector<int> newly;
            for (int u : (*nbrs)[w])
                if (u > root && !visited[u]) {
                    visited[u] = 1;
                    newly.push_back(u);
                    next.push_back(u);
                }
            extend(root, std::move(next));
            for (int u : newly) visited[u] = 0;
            remove_last();
            if (over_budget->load(std::memory_order_relaxed)) return;
        }
    }

    void run_root(int root) {
        std::fill(chk_deg.begin(), chk_deg.end(), 0);
        std::fill(visited.begin(), visited.end(), 0);
        members.clear();
        b_cur = 0;
        visited[root] = 1;
        if (!try_add(root)) return;
        std::vector<int> ext;
        for (int u : (*nbrs)[root])
            if (u > root) {
                visited[u] = 1;
                ext.push_back(u);
            }
        extend(root, std::move(ext));
        remove_last();
    }
};

inline std::vector<std::vector<int>> shared_check_neighbors(const TannerGraph& G) {
    std::vector<std::set<int>> nb(G.num_vars());
    for (const auto& vs : G.chk_adj)
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                nb[vs[i]].insert(vs[j]);
                nb[vs[j]].insert(vs[i]);
            }
    std::vector<std::vector<int>> out(G.num_vars());
    for (int v = 0; v < G.num_vars(); ++v) out[v].assign(nb[v].begin(), nb[v].end());
    return out;
}

}  // namespace detail

/// Exhaustive elementary trapping-set search, with the quasi-cyclic symmetry
/// folded out: every shift orbit contains a subset whose smallest variable has
/// offset 0, so connected enumeration roots range over offset-0 variables only
/// and results are deduplicated by the lexicographically smallest shift.
/// Disconnected sets are recovered exactly by composing check-disjoint
/// connected records.
///
/// b_max is capped below 2m to bound the composition pool; the trapping sets
/// this workbench certifies all sit well inside that range.
inline EtsCertificate find_ets(const TannerGraph& G, const EtsQuery& Q) {
    if (Q.a_max < 1 || Q.a_max > VnGraph::kMaxOrder) throw std::invalid_argument("find_ets: need 1 <= a_max <= 8");
    if (Q.b_max < 0) throw std::invalid_argument("find_ets: b_max must be >= 0");
    if (!Q.elementary_only) throw std::invalid_argument("find_ets: only elementary_only searches are supported");
    if (Q.b_max >= 2 * G.chk_blocks)
        throw std::invalid_argument("find_ets: b_max must be < 2m (larger budgets are unsupported)");

    const auto nbrs = detail::shared_check_neighbors(G);
    std::vector<int> roots;
    for (int j = 0; j < G.var_blocks; ++j) roots.push_back(G.var_id(j, 0));

    std::atomic<long long> expansions{0};
    std::atomic<bool> over_budget{false};

    const int n_workers = std::max(1, std::min<int>(Q.threads, static_cast<int>(roots.size())));
    std::vector<std::set<std::vector<int>>> results(n_workers);
    std::atomic<size_t> next_root{0};

    auto work = [&](int wid) {
        detail::EtsSearchContext ctx;
        ctx.G = &G;
        ctx.nbrs = &nbrs;
        ctx.a_max = Q.a_max;
        ctx.b_max = Q.b_max;
        ctx.col_weight = G.chk_blocks;
        ctx.budget = Q.budget;
        ctx.expansions = &expansions;
        ctx.over_budget = &over_budget;
        ctx.chk_deg.assign(G.num_checks(), 0);
        ctx.visited.assign(G.num_vars(), 0);
        for (size_t i = next_root.fetch_add(1); i < roots.size(); i = next_root.fetch_add(1)) {
            ctx.run_root(roots[i]);
            if (over_budget.load(std::memory_order_relaxed)) break;
        }
        expansions.fetch_add(ctx.local_expansions % 4096, std::memory_order_relaxed);
        results[wid] = std::move(ctx.found);
    };
    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::set<std::vector<int>> merged;
    for (auto& r : results) merged.merge(r);

    // Disconnected elementary sets are unions of check-disjoint connected
    // ones, and every component of a qualifying set is itself a qualifying
    // record, so compose the connected pool. Anchors range over the orbit
    // representatives; partners over all shifts; the union canonicalization
    // removes duplicates. Compositions are rare (component b values must sum
    // within b_max) but real: a b=0 component plus a singleton, for example.
    if (!over_budget.load() && !merged.empty()) {
        struct PoolEntry {
            std::vector<int> subset;
            std::vector<int> checks;  // sorted
            int a, b;
        };
        auto entry_for = [&](const std::vector<int>& s) {
            PoolEntry e;
            e.subset = s;
            e.a = static_cast<int>(s.size());
            std::map<int, int> deg;
            for (int v : s)
                for (int c : G.var_adj[v]) ++deg[c];
            e.b = 0;
            for (auto [c, d] : deg) {
                e.checks.push_back(c);
                if (d % 2) ++e.b;
            }
            return e;
        };
        std::vector<PoolEntry> anchors;
        for (const auto& s : merged) anchors.push_back(entry_for(s));
        std::vector<PoolEntry> partners;
        for (const auto& s : merged) {
            std::set<std::vector<int>> shifts;
            for (int c = 0; c < G.lift; ++c) {
                std::vector<int> sh(s.size());
                for (size_t i = 0; i < s.size(); ++i) sh[i] = s[i] / G.lift * G.lift + (s[i] + c) % G.lift;
                std::sort(sh.begin(), sh.end());
                shifts.insert(std::move(sh));
            }
            for (const auto& sh : shifts) partners.push_back(entry_for(sh));
        }
        auto disjoint = [](const std::vector<int>& x, const std::vector<int>& y) {
            size_t i = 0, j = 0;
            while (i < x.size() && j < y.size()) {
                if (x[i] == y[j]) return false;
                x[i] < y[j] ? ++i : ++j;
            }
            return true;
        };
        std::set<std::vector<int>> composed;
        auto compose = [&](auto&& self, const std::vector<int>& subset, const std::vector<int>& checks,
                           int a_sum, int b_sum) -> void {
            for (const auto& p : partners) {
                if (a_sum + p.a > Q.a_max || b_sum + p.b > Q.b_max) continue;
                if (!disjoint(checks, p.checks)) continue;
                std::vector<int> s2 = subset, c2 = checks;
                s2.insert(s2.end(), p.subset.begin(), p.subset.end());
                c2.insert(c2.end(), p.checks.begin(), p.checks.end());
                std::sort(s2.begin(), s2.end());
                std::sort(c2.begin(), c2.end());
                composed.insert(detail::orbit_canonical(s2, G.lift));
                self(self, s2, c2, a_sum + p.a, b_sum + p.b);
            }
        };
        for (const auto& an : anchors)
            if (an.a < Q.a_max) compose(compose, an.subset, an.checks, an.a, an.b);
        merged.merge(composed);
    }

    EtsCertificate cert;
    cert.expansions = expansions.load();
    std::set<std::vector<int>> emit;
    if (Q.expand_orbits) {
        for (const auto& s : merged)
            for (int c = 0; c < G.lift; ++c) {
                std::vector<int> shifted(s.size());
                for (size_t i = 0; i < s.size(); ++i) shifted[i] = s[i] / G.lift * G.lift + (s[i] + c) % G.lift;
                std::sort(shifted.begin(), shifted.end());
                emit.insert(std::move(shifted));
            }
    } else {
        emit = std::move(merged);
    }
    // Structural invariants of (7,4) records hold only when the graph really
    // has girth 8; verify that before asserting, so queries with a stale
    // girth_context fail through the claims rather than through an assertion.
    bool assert_74 = Q.girth_context == 8 && !bfs_girth(G, 8).has_value();
    for (const auto& s : emit) {
        auto rec = classify_subset(G, s);
        if (assert_74 && rec.a == 7 && rec.b == 4) {
            if (has_triangle(rec.vn_graph) || !is_bipartite(rec.vn_graph))
                throw std::logic_error("find_ets: (7,4) record violates the girth-8 structure");
        }
        cert.records.push_back(std::move(rec));
    }
    cert.status = over_budget.load() ? EtsCertificate::Status::Inconclusive
                : cert.records.empty() ? EtsCertificate::Status::Free
                                       : EtsCertificate::Status::Found;
    return cert;
}

/// Ground-truth oracle: classify every single a-subset, no pruning and no
/// symmetry reduction. Guarded to C(num_vars, a) <= 10^9 enumeration leaves.
inline std::vector<EtsRecord> brute_force_ets_oracle(const TannerGraph& G, int a, int b_max) {
    if (a < 1) throw std::invalid_argument("oracle: a must be >= 1");
    const int V = G.num_vars();
    if (a > V) return {};
    long double leaves = 1.0L;
    for (int i = 0; i < a; ++i) leaves = leaves * (V - i) / (i + 1);
    if (leaves > 1e9L) throw std::invalid_argument("oracle: C(n*N, a) exceeds the 1e9 guard");

    std::vector<int> chk_deg(G.num_checks(), 0);
    std::vector<int> members;
    std::vector<std::vector<int>> hits;
    int b_cur = 0, ge3 = 0;

    auto push = [&](int v) {
        for (int c : G.var_adj[v]) {
            int& d = chk_deg[c];
            if (d == 2) ++ge3;
            b_cur += (d % 2 == 0) ? 1 : -1;
            ++d;
        }
        members.push_back(v);
    };
    auto pop = [&]() {
        int v = members.back();
        members.pop_back();
        for (int c : G.var_adj[v]) {
            int& d = chk_deg[c];
            --d;
            if (d == 2) --ge3;
            b_cur += (d % 2 == 0) ? -1 : 1;  // degree dropped from odd to even or vice versa
        }
    };
    auto rec = [&](auto&& self, int first) -> void {
        if (static_cast<int>(members.size()) == a) {
            if (ge3 == 0 && b_cur <= b_max) hits.push_back(members);
            return;
        }
        int need = a - static_cast<int>(members.size());
        for (int v = first; v <= V - need; ++v) {
            push(v);
            self(self, v + 1);
            pop();
        }
    };
    rec(rec, 0);

    std::vector<EtsRecord> out;
    out.reserve(hits.size());
    for (const auto& s : hits) out.push_back(classify_subset(G, s));
    return out;
}

}  // namespace qcl
