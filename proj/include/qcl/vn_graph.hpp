#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qcl/exponent_matrix.hpp"

namespace qcl {

/// Small simple graph on the variable nodes of a trapping set: one edge per
/// satisfied (degree-2) check. Capped at 8 vertices; everything downstream is
/// exhaustive at that size.
struct VnGraph {
    static constexpr int kMaxOrder = 8;

    int order = 0;
    std::array<uint8_t, kMaxOrder> adj{};        ///< adjacency bitmasks
    std::vector<std::pair<int, int>> edges;      ///< u < v, insertion order
    std::string tag;                             ///< optional builtin name

    VnGraph() = default;
    explicit VnGraph(int n) : order(n) {
        if (n < 0 || n > kMaxOrder) throw std::invalid_argument("VnGraph supports at most 8 vertices");
    }

    bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("VnGraph: no loops");
        if (u < 0 || v < 0 || u >= order || v >= order) throw std::invalid_argument("VnGraph: vertex out of range");
        if (has_edge(u, v)) throw std::invalid_argument("VnGraph: duplicate edge");
        adj[u] |= uint8_t(1u << v);
        adj[v] |= uint8_t(1u << u);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    int degree(int v) const { return std::popcount(adj[v]); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order; ++v) d = std::max(d, degree(v));
        return d;
    }
    int num_edges() const { return static_cast<int>(edges.size()); }
    std::vector<int> degree_sequence() const {  // descending
        std::vector<int> d;
        for (int v = 0; v < order; ++v) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }
};

inline bool is_connected(const VnGraph& g) {
    if (g.order == 0) return false;
    uint8_t seen = 1;
    uint8_t frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        for (int v = 0; v < g.order; ++v)
            if (frontier >> v & 1) next |= g.adj[v];
        frontier = next & uint8_t(~seen);
        seen |= next;
    }
    return seen == uint8_t((1u << g.order) - 1);
}

inline bool has_triangle(const VnGraph& g) {
    for (const auto& [u, v] : g.edges)
        if (g.adj[u] & g.adj[v]) return true;
    return false;
}

inline bool is_bipartite(const VnGraph& g) {
    std::array<int, VnGraph::kMaxOrder> color;
    color.fill(-1);
    for (int s = 0; s < g.order; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.order; ++v)
                if (g.has_edge(u, v)) {
                    if (color[v] == -1) {
                        color[v] = 1 - color[u];
                        stack.push_back(v);
                    } else if (color[v] == color[u]) {
                        return false;
                    }
                }
        }
    }
    return true;
}

namespace detail {

/// Upper-triangle adjacency bits under a vertex relabeling p (new label of
/// old vertex v is p[v]), packed most-significant-first so lexicographic
/// comparison of codes matches lexicographic comparison of bit matrices.
inline uint32_t relabel_code(const VnGraph& g, const std::array<int, 8>& p) {
    uint32_t code = 0;
    int bit = 0;
    std::array<int, 8> inv{};
    for (int v = 0; v < g.order; ++v) inv[p[v]] = v;
    for (int i = 0; i < g.order; ++i)
        for (int j = i + 1; j < g.order; ++j) {
            code <<= 1;
            code |= g.has_edge(inv[i], inv[j]) ? 1u : 0u;
            ++bit;
        }
    return code << (28 - bit);
}

/// Visit every relabeling that sorts vertices into non-increasing degree
/// order (permutations only mix within equal-degree classes). Isomorphic
/// graphs share this relabeling family, so the max code over it is canonical.
template <typename Fn>
void for_each_degree_sorted_relabeling(const VnGraph& g, Fn&& fn) {
    std::vector<int> verts(g.order);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // class boundaries
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < g.order;) {
        int j = i;
        while (j < g.order && g.degree(verts[j]) == g.degree(verts[i])) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::array<int, 8> p{};
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            fn(p);
            return;
        }
        auto [lo, hi] = classes[ci];
        std::sort(verts.begin() + lo, verts.begin() + hi);
        do {
            for (int i = lo; i < hi; ++i) p[verts[i]] = i;
            self(self, ci + 1);
        } while (std::next_permutation(verts.begin() + lo, verts.begin() + hi));
    };
    rec(rec, 0);
}

}  // namespace detail

/// Canonical form: the maximum relabeled adjacency code over all
/// degree-sorted relabelings. Equal codes (with equal order) mean isomorphic.
inline uint32_t canonical_code(const VnGraph& g) {
    uint32_t best = 0;
    detail::for_each_degree_sorted_relabeling(g, [&](const std::array<int, 8>& p) {
        best = std::max(best, detail::relabel_code(g, p));
    });
    return best;
}

/// Brute-force isomorphism with a degree-sequence prefilter; sizes here are
/// at most 8 vertices so permutation search is plenty.
inline bool are_isomorphic(const VnGraph& g, const VnGraph& h) {
    if (g.order != h.order || g.num_edges() != h.num_edges()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_code(g) == canonical_code(h);
}

/// The `a` induced subgraphs obtained by deleting one vertex.
inline std::vector<VnGraph> vertex_deleted_subgraphs(const VnGraph& g) {
    std::vector<VnGraph> out;
    for (int del = 0; del < g.order; ++del) {
        VnGraph sub(g.order - 1);
        for (const auto& [u, v] : g.edges) {
            if (u == del || v == del) continue;
            sub.add_edge(u - (u > del), v - (v > del));
        }
        out.push_back(std::move(sub));
    }
    return out;
}

/// All pairwise non-isomorphic candidate VN graphs of an (a, b) elementary
/// trapping set in a column-weight-gamma code: connected simple graphs on
/// `a` vertices with degree sum a*gamma - b, max degree <= gamma, and
/// triangle-free when the ambient girth is 8 (a VN-graph triangle is a
/// 6-cycle). Infeasible parameters yield an empty list.
///
/// Only connected graphs are produced: in the (a, b) ranges this tool
/// targets (b <= 4 at gamma = 4), a disconnected candidate is impossible,
/// because each connected component of size s contributes at least
/// 4 (s = 1), 6 (s = 2) or 4 (s = 3, 4) degree-one checks under simpleness
/// and the degree cap, so two components already exceed the b budget.
inline std::vector<VnGraph> enumerate_vn_graphs(int a, int b, int gamma = 4, int girth_floor = 6) {
    if (a < 1 || a > VnGraph::kMaxOrder) throw std::invalid_argument("enumerate_vn_graphs: need 1 <= a <= 8");
    if (girth_floor != 6 && girth_floor != 8) throw std::invalid_argument("girth_floor must be 6 or 8");
    if (b < 0 || b > a * gamma) return {};
    const int target = a * gamma - b;
    if (target % 2 != 0) return {};
    const bool triangle_free = girth_floor == 8;

    // Grow vertex by vertex; at each level keep one representative per
    // isomorphism class. Degree caps and triangle-freeness are hereditary,
    // the exact degree sum and connectivity are filtered at the last level.
    std::vector<VnGraph> frontier{VnGraph(1)};
    for (int sz = 2; sz <= a; ++sz) {
        std::set<uint32_t> seen;
        std::vector<VnGraph> next;
        for (const auto& g : frontier) {
            const int prev = g.order;
            for (uint32_t nb = 0; nb < (1u << prev); ++nb) {
                if (std::popcount(nb) > gamma) continue;
                bool ok = true;
                for (int v = 0; v < prev && ok; ++v)
                    if (nb >> v & 1) {
                        if (g.degree(v) >= gamma) ok = false;
                        if (triangle_free && (g.adj[v] & nb)) ok = false;
                    }
                if (!ok) continue;
                VnGraph h(sz);
                h.adj = g.adj;
                h.edges = g.edges;
                for (int v = 0; v < prev; ++v)
                    if (nb >> v & 1) h.add_edge(v, prev);
                // degree-sum window: each future edge consumes two units from
                // the pool of remaining degree capacity (existing slack plus
                // gamma per future vertex)
                int sum = 2 * h.num_edges();
                int rem = a - sz;
                int slack = 0;
                for (int v = 0; v < sz; ++v) slack += gamma - h.degree(v);
                if (sum > target || sum + 2 * ((slack + gamma * rem) / 2) < target) continue;
                if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    std::vector<VnGraph> out;
    for (auto& g : frontier)
        if (2 * g.num_edges() == target && is_connected(g) && g.max_degree() <= gamma) out.push_back(std::move(g));
    return out;
}

// ---- named builtins ------------------------------------------------------

inline VnGraph make_complete(int n) {
    VnGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.tag = "K" + std::to_string(n);
    return g;
}

inline VnGraph make_complete_bipartite(int p, int q) {
    VnGraph g(p + q);
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) g.add_edge(u, p + v);
    g.tag = "K" + std::to_string(p) + "," + std::to_string(q);
    return g;
}

/// K5 minus two disjoint edges: the (5,4) candidate with a single
/// degree-4 vertex; contains no K4.
inline VnGraph make_type1() {
    auto g = make_complete(5);
    VnGraph h(5);
    for (const auto& [u, v] : g.edges)
        if (!(u == 0 && v == 1) && !(u == 2 && v == 3)) h.add_edge(u, v);
    h.tag = "type1";
    return h;
}

/// K5 minus two adjacent edges: the (5,4) candidate containing K4.
inline VnGraph make_type2() {
    auto g = make_complete(5);
    VnGraph h(5);
    for (const auto& [u, v] : g.edges)
        if (!(u == 0 && v == 1) && !(u == 0 && v == 2)) h.add_edge(u, v);
    h.tag = "type2";
    return h;
}

/// The 4-regular graph on 6 vertices (K_{2,2,2}): K6 minus a perfect matching.
inline VnGraph make_octahedron() {
    VnGraph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(v == u + 1 && u % 2 == 0)) g.add_edge(u, v);
    g.tag = "octahedron";
    return g;
}

inline VnGraph builtin_vn_graph(std::string_view tag) {
    if (tag == "K5") return make_complete(5);
    if (tag == "K34") {
        auto g = make_complete_bipartite(3, 4);
        g.tag = "K34";
        return g;
    }
    if (tag == "octahedron") return make_octahedron();
    if (tag == "type1") return make_type1();
    if (tag == "type2") return make_type2();
    throw std::invalid_argument("unknown builtin graph: " + std::string(tag));
}

// ---- exchange format: order on line 1, one "u v" edge per line -----------

inline VnGraph parse_vn_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_order = false;
    VnGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_order) {
            // note: a failed extraction still writes to its target, so the
            // flag, not a sentinel value, decides whether the count was read
            int order;
            if (!(ls >> order)) continue;
            if (order < 1 || order > VnGraph::kMaxOrder) throw ParseError(lineno, "vertex count must be 1..8");
            g = VnGraph(order);
            have_order = true;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError(lineno, "edge line must be \"u v\"");
        if (u < 0 || v < 0 || u >= g.order || v >= g.order) throw ParseError(lineno, "edge endpoint out of range");
        if (u == v) throw ParseError(lineno, "loops are not allowed");
        if (g.has_edge(u, v)) throw ParseError(lineno, "duplicate edge");
        g.add_edge(u, v);
    }
    if (!have_order) throw ParseError(lineno, "missing vertex count line");
    return g;
}

inline std::string print_vn_graph(const VnGraph& g) {
    std::ostringstream out;
    out << g.order << '\n';
    auto es = g.edges;
    std::sort(es.begin(), es.end());
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace qcl
