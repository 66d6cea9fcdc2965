#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "qcl/exponent_matrix.hpp"

namespace qcl {

/// One step of a closed walk on the exponent matrix: the cycle's t-th check
/// block is `row`, entered from column `col` and left toward the next slot's
/// column. A length-2k cycle is k slots.
struct CycleSlot {
    int row = 0;
    int col = 0;
    auto operator<=>(const CycleSlot&) const = default;
};

using SlotSeq = std::vector<CycleSlot>;

/// A canonical solution of the mod-N cycle condition
///   sum_i (b[m_i][n_i] - b[m_i][n_{i+1}]) == 0 (mod N),  n_k = n_0,
/// with m_i != m_{i+1} and n_i != n_{i+1} cyclically. Every solution marks a
/// family of N cycles of length 2k in the lifted graph.
struct CycleWitness {
    SlotSeq slots;

    int length() const { return 2 * static_cast<int>(slots.size()); }
    std::vector<int> row_pattern() const {
        std::vector<int> r;
        r.reserve(slots.size());
        for (const auto& s : slots) r.push_back(s.row);
        return r;
    }
    std::vector<int> row_multiset() const {
        auto r = row_pattern();
        std::sort(r.begin(), r.end());
        return r;
    }
    auto operator<=>(const CycleWitness&) const = default;
};

/// All 2k rotations and reflections of a slot sequence. Rotation shifts the
/// start slot; reflection reverses traversal, sending slot j to
/// (m_{k-1-j}, n_{(k-j) mod k}).
inline std::vector<SlotSeq> slot_transforms(const SlotSeq& s) {
    const int k = static_cast<int>(s.size());
    std::vector<SlotSeq> out;
    out.reserve(2 * k);
    SlotSeq t(k);
    for (int r = 0; r < k; ++r) {
        for (int i = 0; i < k; ++i) t[i] = s[(i + r) % k];
        out.push_back(t);
    }
    SlotSeq rev(k);
    for (int j = 0; j < k; ++j) rev[j] = {s[(k - 1 - j) % k].row, s[(k - j) % k].col};
    for (int r = 0; r < k; ++r) {
        for (int i = 0; i < k; ++i) t[i] = rev[(i + r) % k];
        out.push_back(t);
    }
    return out;
}

/// Lexicographically smallest transform; stable identity for counting.
inline SlotSeq canonical_slots(const SlotSeq& s) {
    auto all = slot_transforms(s);
    return *std::min_element(all.begin(), all.end());
}

namespace detail {

/// Visit every raw (uncanonicalized) solution of the length-2k condition.
/// Rows and columns are chosen as ordered tuples with cyclic adjacent
/// inequality; repeats at distance >= 2 are allowed. Return false from the
/// callback to stop early.
template <typename Fn>
bool for_each_raw_solution(const ExponentMatrix& B, int k, Fn&& fn) {
    const int m = B.rows, n = B.cols, N = B.lift;
    std::vector<int> rows(k), cols(k);

    // Enumerate columns for a fixed row tuple, tracking the partial sum.
    auto cols_dfs = [&](auto&& self, int pos, int sum) -> bool {
        if (pos == k) {
            // close the walk: last difference uses n_{k-1} -> n_0
            if (cols[k - 1] == cols[0]) return true;
            int total = (sum + B.at(rows[k - 1], cols[k - 1]) - B.at(rows[k - 1], cols[0])) % N;
            if (total % N == 0) {
                SlotSeq s(k);
                for (int i = 0; i < k; ++i) s[i] = {rows[i], cols[i]};
                return fn(std::move(s));
            }
            return true;
        }
        for (int c = 0; c < n; ++c) {
            if (pos > 0 && c == cols[pos - 1]) continue;
            cols[pos] = c;
            int s2 = sum;
            if (pos > 0) s2 += B.at(rows[pos - 1], cols[pos - 1]) - B.at(rows[pos - 1], c);
            if (!self(self, pos + 1, s2)) return false;
        }
        return true;
    };

    auto rows_dfs = [&](auto&& self, int pos) -> bool {
        if (pos == k) {
            if (rows[k - 1] == rows[0]) return true;
            return cols_dfs(cols_dfs, 0, 0);
        }
        for (int r = 0; r < m; ++r) {
            if (pos > 0 && r == rows[pos - 1]) continue;
            rows[pos] = r;
            if (!self(self, pos + 1)) return false;
        }
        return true;
    };
    return rows_dfs(rows_dfs, 0);
}

}  // namespace detail

/// All canonical solutions of length 2k, sorted. An empty result certifies the
/// lifted Tanner graph has no 2k-cycles (degenerate solutions always contain a
/// shorter solution, so girth logic stays exact).
inline std::vector<CycleWitness> enumerate_cycle_solutions(const ExponentMatrix& B, int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("cycle length 2k must have 2 <= k <= 6");
    B.validate();
    std::set<SlotSeq> seen;
    detail::for_each_raw_solution(B, k, [&](SlotSeq s) {
        seen.insert(canonical_slots(s));
        return true;
    });
    std::vector<CycleWitness> out;
    out.reserve(seen.size());
    for (auto& s : seen) out.push_back(CycleWitness{s});
    return out;
}

inline bool has_cycle_solutions(const ExponentMatrix& B, int k) {
    bool found = false;
    detail::for_each_raw_solution(B, k, [&](SlotSeq) {
        found = true;
        return false;
    });
    return found;
}

/// First witness of length 2k if any (canonicalized).
inline std::optional<CycleWitness> first_cycle_solution(const ExponentMatrix& B, int k) {
    std::optional<CycleWitness> w;
    detail::for_each_raw_solution(B, k, [&](SlotSeq s) {
        w = CycleWitness{canonical_slots(s)};
        return false;
    });
    return w;
}

/// Girth computed on the exponent matrix alone: smallest 2k < cap with a
/// solution of the cycle condition, nullopt when none exists below cap.
inline std::optional<int> exponent_girth(const ExponentMatrix& B, int cap) {
    if (cap > 14) throw std::invalid_argument("exponent_girth cap is limited to 14 (k <= 6)");
    B.validate();
    for (int k = 2; 2 * k < cap; ++k)
        if (has_cycle_solutions(B, k)) return 2 * k;
    return std::nullopt;
}

}  // namespace qcl
