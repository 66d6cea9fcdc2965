#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qcl/vn_graph.hpp"

namespace qcl {

/// Forbidden triangle color set: a proper coloring gives a triangle three
/// distinct colors, so matching is plain set equality.
struct TrianglePattern {
    std::array<int, 3> colors{};  ///< distinct labels, stored sorted
    TrianglePattern() = default;
    TrianglePattern(int a, int b, int c) : colors{a, b, c} {
        std::sort(colors.begin(), colors.end());
        if (colors[0] == colors[1] || colors[1] == colors[2])
            throw std::invalid_argument("triangle pattern needs 3 distinct colors");
    }
};

/// Forbidden 4-cycle pattern: cyclic colors (c1,c2,c3,c4) match iff the
/// doubled label sits on opposite edges and the required label on one of the
/// other two; invariant under rotation and reflection by construction.
struct QuadPattern {
    int color_double = 0;
    int color_required = 0;
    QuadPattern() = default;
    QuadPattern(int d, int r) : color_double(d), color_required(r) {
        if (d == r) throw std::invalid_argument("quad pattern needs two distinct colors");
    }
    bool matches(const std::array<int, 4>& c) const {
        return (c[0] == color_double && c[2] == color_double && (c[1] == color_required || c[3] == color_required)) ||
               (c[1] == color_double && c[3] == color_double && (c[0] == color_required || c[2] == color_required));
    }
};

namespace detail {

struct ColoringProblem {
    int n_edges = 0;
    int colors = 0;
    std::vector<std::vector<int>> earlier_adjacent;  ///< per edge: adjacent edges with smaller index
    // constructs checked once their last edge (by index) is colored
    struct Tri {
        std::array<int, 3> e;
        int last;
    };
    struct Quad {
        std::array<int, 4> e;  ///< cyclic order
        int last;
    };
    std::vector<Tri> triangles;
    std::vector<Quad> quads;
    std::vector<TrianglePattern> tri_patterns;
    std::vector<QuadPattern> quad_patterns;
};

inline ColoringProblem build_problem(const VnGraph& g, int colors,
                                     std::vector<TrianglePattern> tri,
                                     std::vector<QuadPattern> quad) {
    ColoringProblem p;
    p.n_edges = g.num_edges();
    p.colors = colors;
    p.tri_patterns = std::move(tri);
    p.quad_patterns = std::move(quad);
    std::map<std::pair<int, int>, int> eidx;
    for (int i = 0; i < p.n_edges; ++i) eidx[g.edges[i]] = i;
    p.earlier_adjacent.resize(p.n_edges);
    for (int i = 0; i < p.n_edges; ++i)
        for (int j = 0; j < i; ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) p.earlier_adjacent[i].push_back(j);
        }
    auto edge_at = [&](int u, int v) { return eidx.at({std::min(u, v), std::max(u, v)}); };
    if (!p.tri_patterns.empty())
        for (int u = 0; u < g.order; ++u)
            for (int v = u + 1; v < g.order; ++v)
                for (int w = v + 1; w < g.order; ++w)
                    if (g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) {
                        ColoringProblem::Tri t{{edge_at(u, v), edge_at(v, w), edge_at(u, w)}, 0};
                        t.last = std::max({t.e[0], t.e[1], t.e[2]});
                        p.triangles.push_back(t);
                    }
    if (!p.quad_patterns.empty())
        for (int a = 0; a < g.order; ++a)
            for (int b = a + 1; b < g.order; ++b)
                for (int c = b + 1; c < g.order; ++c)
                    for (int d = c + 1; d < g.order; ++d) {
                        // three cyclic orders of {a,b,c,d} up to rotation/reflection
                        const std::array<std::array<int, 4>, 3> orders = {
                            {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
                        for (const auto& o : orders) {
                            bool cyc = g.has_edge(o[0], o[1]) && g.has_edge(o[1], o[2]) &&
                                       g.has_edge(o[2], o[3]) && g.has_edge(o[3], o[0]);
                            if (!cyc) continue;
                            ColoringProblem::Quad q{{edge_at(o[0], o[1]), edge_at(o[1], o[2]),
                                                     edge_at(o[2], o[3]), edge_at(o[3], o[0])},
                                                    0};
                            q.last = std::max({q.e[0], q.e[1], q.e[2], q.e[3]});
                            p.quads.push_back(q);
                        }
                    }
    return p;
}

/// Exhaustive backtracking over edge colors. Stops at the first completion in
/// existence mode; otherwise counts all proper colorings that avoid every
/// forbidden pattern.
inline long long run_coloring(const ColoringProblem& p, bool count_all) {
    std::vector<int> col(p.n_edges, 0);
    long long count = 0;
    auto consistent = [&](int i) {
        for (int j : p.earlier_adjacent[i])
            if (col[j] == col[i]) return false;
        for (const auto& t : p.triangles) {
            if (t.last != i) continue;
            std::array<int, 3> cs{col[t.e[0]], col[t.e[1]], col[t.e[2]]};
            std::sort(cs.begin(), cs.end());
            for (const auto& pat : p.tri_patterns)
                if (cs == pat.colors) return false;
        }
        for (const auto& q : p.quads) {
            if (q.last != i) continue;
            std::array<int, 4> cs{col[q.e[0]], col[q.e[1]], col[q.e[2]], col[q.e[3]]};
            for (const auto& pat : p.quad_patterns)
                if (pat.matches(cs)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == p.n_edges) {
            ++count;
            return !count_all;  // stop at first in existence mode
        }
        for (int c = 1; c <= p.colors; ++c) {
            col[i] = c;
            if (consistent(i) && self(self, i + 1)) return true;
        }
        col[i] = 0;
        return false;
    };
    if (p.n_edges == 0) return 1;  // the empty coloring
    rec(rec, 0);
    return count;
}

inline long long colorings_unchecked(const VnGraph& g, int colors, std::vector<TrianglePattern> tri,
                                     std::vector<QuadPattern> quad, bool count_all) {
    if (colors < 0) throw std::invalid_argument("colors must be nonnegative");
    if (g.num_edges() > 0 && colors == 0) return 0;
    return run_coloring(build_problem(g, colors, std::move(tri), std::move(quad)), count_all);
}

}  // namespace detail

/// Number of proper edge colorings with palette {1..colors} avoiding every
/// forbidden triangle color set and 4-cycle pattern.
inline long long count_constrained_colorings(const VnGraph& g, int colors,
                                             std::vector<TrianglePattern> tri = {},
                                             std::vector<QuadPattern> quad = {}) {
    if (colors > 6) throw std::invalid_argument("constrained coloring palette is capped at 6");
    return detail::colorings_unchecked(g, colors, std::move(tri), std::move(quad), true);
}

inline bool exists_constrained_coloring(const VnGraph& g, int colors,
                                        std::vector<TrianglePattern> tri = {},
                                        std::vector<QuadPattern> quad = {}) {
    if (colors > 6) throw std::invalid_argument("constrained coloring palette is capped at 6");
    return detail::colorings_unchecked(g, colors, std::move(tri), std::move(quad), false) > 0;
}

/// Chromatic index by exhaustive search: try max degree, else it is
/// max degree + 1 (Vizing).
inline int chromatic_index(const VnGraph& g) {
    if (g.num_edges() == 0) return 0;
    const int delta = g.max_degree();
    if (detail::colorings_unchecked(g, delta, {}, {}, false) > 0) return delta;
    return delta + 1;
}

/// Maximum matching size, exhaustive over the <= 8 vertices.
inline int matching_number(const VnGraph& g) {
    auto rec = [&](auto&& self, uint8_t uncovered) -> int {
        int u = -1;
        for (int v = 0; v < g.order; ++v)
            if (uncovered >> v & 1) {
                u = v;
                break;
            }
        if (u < 0) return 0;
        int best = self(self, uint8_t(uncovered & ~(1u << u)));  // leave u unmatched
        for (int v = u + 1; v < g.order; ++v)
            if ((uncovered >> v & 1) && g.has_edge(u, v))
                best = std::max(best, 1 + self(self, uint8_t(uncovered & ~(1u << u) & ~(1u << v))));
        return best;
    };
    return rec(rec, uint8_t((1u << g.order) - 1));
}

}  // namespace qcl
