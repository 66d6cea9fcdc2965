#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <vector>

#include "qcl/exponent_matrix.hpp"

namespace qcl {

/// Node ids are flat: variable node (block j, offset t) has id j*N + t, check
/// node (block i, offset s) has id i*N + s. The circulant orientation is fixed
/// as: variable (j, t) is adjacent to check (i, s) iff s = (t + b[i][j]) mod N.
/// Cycle structure is invariant under the transpose convention, so nothing
/// downstream depends on the choice beyond reproducibility of node ids.
struct TannerGraph {
    int var_blocks = 0;  ///< n
    int chk_blocks = 0;  ///< m
    int lift = 0;        ///< N
    std::vector<std::vector<int>> var_adj;  ///< variable id -> sorted check ids
    std::vector<std::vector<int>> chk_adj;  ///< check id -> sorted variable ids

    int num_vars() const { return var_blocks * lift; }
    int num_checks() const { return chk_blocks * lift; }

    int var_block(int v) const { return v / lift; }
    int var_offset(int v) const { return v % lift; }
    int chk_block(int c) const { return c / lift; }
    int chk_offset(int c) const { return c % lift; }
    int var_id(int block, int offset) const { return block * lift + offset; }
};

inline TannerGraph lift(const ExponentMatrix& B) {
    B.validate();
    TannerGraph G;
    G.var_blocks = B.cols;
    G.chk_blocks = B.rows;
    G.lift = B.lift;
    const int N = B.lift;
    G.var_adj.assign(static_cast<size_t>(B.cols) * N, {});
    G.chk_adj.assign(static_cast<size_t>(B.rows) * N, {});
    for (int j = 0; j < B.cols; ++j)
        for (int t = 0; t < N; ++t) {
            int v = j * N + t;
            for (int i = 0; i < B.rows; ++i) {
                int c = i * N + (t + B.at(i, j)) % N;
                G.var_adj[v].push_back(c);
                G.chk_adj[c].push_back(v);
            }
        }
    for (auto& a : G.chk_adj) std::sort(a.begin(), a.end());
    return G;
}

/// Shortest cycle length by BFS from every node, nullopt when girth >= cap.
/// The graph is bipartite so only even lengths occur. Independent of the
/// exponent-matrix cycle condition on purpose: this is the oracle side.
inline std::optional<int> bfs_girth(const TannerGraph& G, int cap) {
    if (cap < 4) throw std::invalid_argument("bfs_girth cap must be >= 4");
    const int V = G.num_vars();
    const int total = V + G.num_checks();
    auto neighbors = [&](int u, auto&& fn) {
        if (u < V)
            for (int c : G.var_adj[u]) fn(V + c);
        else
            for (int v : G.chk_adj[u - V]) fn(v);
    };
    int best = cap;
    std::vector<int> dist(total), parent(total);
    std::vector<int> stamp(total, -1);
    for (int root = 0; root < total; ++root) {
        std::queue<int> q;
        stamp[root] = root;
        dist[root] = 0;
        parent[root] = -1;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] + 1 >= best) continue;
            neighbors(u, [&](int w) {
                if (stamp[w] != root) {
                    stamp[w] = root;
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (len < best) best = len;
                }
            });
        }
        if (best == 4) break;  // nothing shorter exists in a bipartite graph
    }
    if (best < cap) return best;
    return std::nullopt;
}

/// A plain bipartite adjacency, used to re-import alist files for round-trip
/// checks without assuming any quasi-cyclic structure.
struct BipartiteGraph {
    int n_var = 0, n_chk = 0;
    std::vector<std::vector<int>> var_adj;  ///< variable -> sorted check ids
};

/// alist export, MacKay convention: "nVar nChk", "maxVarDeg maxChkDeg",
/// variable degree list, check degree list, then 1-based neighbor lists padded
/// with zeros to the max degree.
inline std::string to_alist(const TannerGraph& G) {
    std::ostringstream out;
    int maxv = 0, maxc = 0;
    for (const auto& a : G.var_adj) maxv = std::max(maxv, static_cast<int>(a.size()));
    for (const auto& a : G.chk_adj) maxc = std::max(maxc, static_cast<int>(a.size()));
    out << G.num_vars() << ' ' << G.num_checks() << '\n' << maxv << ' ' << maxc << '\n';
    for (int v = 0; v < G.num_vars(); ++v) out << (v ? " " : "") << G.var_adj[v].size();
    out << '\n';
    for (int c = 0; c < G.num_checks(); ++c) out << (c ? " " : "") << G.chk_adj[c].size();
    out << '\n';
    for (const auto& a : G.var_adj) {
        for (int k = 0; k < maxv; ++k) out << (k ? " " : "") << (k < static_cast<int>(a.size()) ? a[k] + 1 : 0);
        out << '\n';
    }
    for (const auto& a : G.chk_adj) {
        for (int k = 0; k < maxc; ++k) out << (k ? " " : "") << (k < static_cast<int>(a.size()) ? a[k] + 1 : 0);
        out << '\n';
    }
    return out.str();
}

inline BipartiteGraph parse_alist(std::string_view text) {
    std::istringstream in{std::string(text)};
    int nv, nc, maxv, maxc;
    if (!(in >> nv >> nc >> maxv >> maxc)) throw std::runtime_error("alist: bad header");
    if (nv < 1 || nc < 1 || nv > 100'000'000 || nc > 100'000'000)
        throw std::runtime_error("alist: node counts out of range");
    if (maxv < 0 || maxv > nc || maxc < 0 || maxc > nv)
        throw std::runtime_error("alist: max degrees out of range");
    std::vector<int> vdeg(nv), cdeg(nc);
    for (auto& d : vdeg)
        if (!(in >> d)) throw std::runtime_error("alist: truncated variable degree list");
    for (auto& d : cdeg)
        if (!(in >> d)) throw std::runtime_error("alist: truncated check degree list");
    BipartiteGraph G;
    G.n_var = nv;
    G.n_chk = nc;
    G.var_adj.assign(nv, {});
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k < maxv; ++k) {
            int c;
            if (!(in >> c)) throw std::runtime_error("alist: truncated variable neighbor list");
            if (c < 0 || c > nc) throw std::runtime_error("alist: check index out of range");
            if (c > 0) G.var_adj[v].push_back(c - 1);
        }
    // check-side lists must mirror the variable side
    std::vector<std::vector<int>> chk(nc);
    for (int c = 0; c < nc; ++c)
        for (int k = 0; k < maxc; ++k) {
            int v;
            if (!(in >> v)) throw std::runtime_error("alist: truncated check neighbor list");
            if (v < 0 || v > nv) throw std::runtime_error("alist: variable index out of range");
            if (v > 0) chk[c].push_back(v - 1);
        }
    for (int v = 0; v < nv; ++v) {
        std::sort(G.var_adj[v].begin(), G.var_adj[v].end());
        if (static_cast<int>(G.var_adj[v].size()) != vdeg[v])
            throw std::runtime_error("alist: variable degree list disagrees with neighbor list");
    }
    for (int c = 0; c < nc; ++c)
        if (static_cast<int>(chk[c].size()) != cdeg[c])
            throw std::runtime_error("alist: check degree list disagrees with neighbor list");
    for (int c = 0; c < nc; ++c)
        for (int v : chk[c])
            if (!std::binary_search(G.var_adj[v].begin(), G.var_adj[v].end(), c))
                throw std::runtime_error("alist: check list edge missing from variable list");
    return G;
}

}  // namespace qcl
