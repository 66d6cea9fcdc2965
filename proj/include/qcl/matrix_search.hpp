#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "qcl/profiles.hpp"

namespace qcl {

struct SearchConfig {
    int n = 5;                       ///< columns; the row count is fixed at 4
    ConstraintProfile profile;
    int N_min = 2, N_max = 13;       ///< inclusive lifting-degree range, scanned ascending
    std::optional<std::vector<int>> seed_rows;  ///< 3*n row-major block fixed as rows 1..3
    uint64_t random_seed = 0;
    long long budget = 200'000'000;  ///< total value placements across all N
    bool normalize = true;           ///< pin first row and first column to zero
    enum class Engine { Complete, Random } engine = Engine::Complete;
};

struct SearchOutcome {
    enum class Status { Found, Exhausted, Budget } status = Status::Exhausted;
    std::optional<ExponentMatrix> matrix;
    int N = 0;
    long long expansions = 0;
    long long restarts = 0;
};

namespace detail {

/// Incremental feasibility for the column-major fill: after placing entry
/// (i, j), test only cycle solutions that pass through that entry and touch
/// placed positions. Every solution has a unique last-placed entry, so a full
/// matrix survives all placements iff it satisfies the profile's cycle
/// constraints (4-cycle-freeness is maintained throughout, which keeps every
/// length-6/8 solution a genuine cycle).
class IncrementalChecker {
public:
    IncrementalChecker(const ConstraintProfile& profile, int m, int n, int N)
        : p_(profile), m_(m), n_(n), N_(N) {}

    /// columns with >= 2 placed rows can participate in cycles
    bool violates(const ExponentMatrix& B, const std::vector<std::vector<bool>>& placed, int i, int j) const {
        if (four_cycle_through(B, placed, i, j)) return true;
        const bool all_triples = p_.girth_floor >= 8;
        if (all_triples || !p_.forbidden_6cycle_row_sets.empty())
            if (six_cycle_through(B, placed, i, j, all_triples)) return true;
        if (p_.forbid_8cycle_doubled_row)
            if (eight_cycle_through(B, placed, i, j, *p_.forbid_8cycle_doubled_row)) return true;
        return false;
    }

private:
    bool placed_at(const std::vector<std::vector<bool>>& placed, int r, int c) const { return placed[r][c]; }

    bool four_cycle_through(const ExponentMatrix& B, const std::vector<std::vector<bool>>& placed, int i,
                            int j) const {
        for (int i2 = 0; i2 < m_; ++i2) {
            if (i2 == i || !placed_at(placed, i2, j)) continue;
            for (int c = 0; c < n_; ++c) {
                if (c == j || !placed_at(placed, i, c) || !placed_at(placed, i2, c)) continue;
                int s = B.at(i, j) - B.at(i, c) + B.at(i2, c) - B.at(i2, j);
                if (s % N_ == 0) return true;
            }
        }
        return false;
    }

    /// 6-cycles through entry (i, j). By the reflection symmetry of the cycle
    /// condition it is enough to scan solutions whose row-i slot enters at
    /// column j: slots ((i,j),(r2,c2),(r3,c3)) over both orders of {r2,r3}.
    bool six_cycle_through(const ExponentMatrix& B, const std::vector<std::vector<bool>>& placed, int i, int j,
                           bool all_triples) const {
        for (int r2 = 0; r2 < m_; ++r2) {
            if (r2 == i) continue;
            for (int r3 = 0; r3 < m_; ++r3) {
                if (r3 == i || r3 == r2) continue;
                if (!all_triples && !forbidden_triple(i, r2, r3)) continue;
                for (int c2 = 0; c2 < n_; ++c2) {
                    if (c2 == j) continue;
                    if (!placed_at(placed, i, c2) || !placed_at(placed, r2, c2)) continue;
                    int part = B.at(i, j) - B.at(i, c2) + B.at(r2, c2);
                    for (int c3 = 0; c3 < n_; ++c3) {
                        if (c3 == c2 || c3 == j) continue;
                        if (!placed_at(placed, r2, c3) || !placed_at(placed, r3, c3) ||
                            !placed_at(placed, r3, j))
                            continue;
                        int s = part - B.at(r2, c3) + B.at(r3, c3) - B.at(r3, j);
                        if (s % N_ == 0) return true;
                    }
                }
            }
        }
        return false;
    }

    bool forbidden_triple(int a, int b, int c) const {
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        for (const auto& rs : p_.forbidden_6cycle_row_sets)
            if (rs == t) return true;
        return false;
    }

    /// Doubled-row 8-cycles through entry (i, j): enumerate row tuples matching
    /// the pattern that involve row i, then column tuples using column j at a
    /// slot of row i.
    bool eight_cycle_through(const ExponentMatrix& B, const std::vector<std::vector<bool>>& placed, int i,
                             int j, const DoubledRowPattern& pat) const {
        std::vector<std::array<int, 4>> row_tuples;
        for (int x = 0; x < m_; ++x) {
            if (x == pat.row_double) continue;
            for (int y = 0; y < m_; ++y) {
                if (y == pat.row_double) continue;
                if (x != pat.row_required && y != pat.row_required) continue;
                std::array<int, 4> t{pat.row_double, x, pat.row_double, y};
                if (t[0] == i || t[1] == i || t[3] == i) row_tuples.push_back(t);
            }
        }
        std::array<int, 4> cols{};
        for (const auto& rows : row_tuples) {
            auto cols_ok = [&](int pos) {
                // adjacency distinctness handled by the caller loops
                return placed_at(placed, rows[pos], cols[pos]) &&
                       placed_at(placed, rows[pos], cols[(pos + 1) % 4]);
            };
            for (int t = 0; t < 4; ++t) {
                if (rows[t] != i) continue;
                // entry (i, j) used as the entering column of slot t
                cols[t] = j;
                for (cols[(t + 1) % 4] = 0; cols[(t + 1) % 4] < n_; ++cols[(t + 1) % 4]) {
                    if (cols[(t + 1) % 4] == cols[t]) continue;
                    for (cols[(t + 2) % 4] = 0; cols[(t + 2) % 4] < n_; ++cols[(t + 2) % 4]) {
                        if (cols[(t + 2) % 4] == cols[(t + 1) % 4]) continue;
                        for (cols[(t + 3) % 4] = 0; cols[(t + 3) % 4] < n_; ++cols[(t + 3) % 4]) {
                            if (cols[(t + 3) % 4] == cols[(t + 2) % 4] || cols[(t + 3) % 4] == cols[t]) continue;
                            bool ok = true;
                            for (int s = 0; s < 4 && ok; ++s) ok = cols_ok(s);
                            if (!ok) continue;
                            int sum = 0;
                            for (int s = 0; s < 4; ++s)
                                sum += B.at(rows[s], cols[s]) - B.at(rows[s], cols[(s + 1) % 4]);
                            if (sum % N_ == 0) return true;
                        }
                    }
                }
            }
        }
        return false;
    }

    const ConstraintProfile& p_;
    int m_, n_, N_;
};

struct FillPlan {
    ExponentMatrix B;
    std::vector<std::vector<bool>> placed;
    std::vector<std::pair<int, int>> free_cells;  ///< column-major fill order
};

inline FillPlan make_plan(const SearchConfig& cfg, int N) {
    constexpr int m = 4;
    FillPlan plan;
    plan.B = ExponentMatrix(m, cfg.n, N);
    plan.placed.assign(m, std::vector<bool>(cfg.n, false));
    auto fix = [&](int i, int j, int value) {
        plan.B.at(i, j) = ((value % N) + N) % N;
        plan.placed[i][j] = true;
    };
    if (cfg.seed_rows) {
        if (static_cast<int>(cfg.seed_rows->size()) != 3 * cfg.n)
            throw std::invalid_argument("seed_rows must hold 3*n entries");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < cfg.n; ++j) fix(i, j, (*cfg.seed_rows)[i * cfg.n + j]);
        if (cfg.normalize) fix(3, 0, 0);
    } else if (cfg.normalize) {
        for (int j = 0; j < cfg.n; ++j) fix(0, j, 0);
        for (int i = 0; i < m; ++i) fix(i, 0, 0);
    }
    for (int j = 0; j < cfg.n; ++j)
        for (int i = 0; i < m; ++i)
            if (!plan.placed[i][j]) plan.free_cells.emplace_back(i, j);
    return plan;
}

/// Seed rows (and the normalization row/column) must not violate the profile
/// among themselves; check each fixed cell once in fill order.
inline bool plan_is_consistent(FillPlan& plan, const IncrementalChecker& chk) {
    std::vector<std::vector<bool>> placed(plan.placed.size(),
                                          std::vector<bool>(plan.placed[0].size(), false));
    for (int j = 0; j < static_cast<int>(plan.placed[0].size()); ++j)
        for (int i = 0; i < static_cast<int>(plan.placed.size()); ++i)
            if (plan.placed[i][j]) {
                placed[i][j] = true;
                if (chk.violates(plan.B, placed, i, j)) return false;
            }
    return true;
}

}  // namespace detail

/// Scan lifting degrees ascending; at each N run the configured engine over
/// the free cells. Complete backtracking yields a definite found/exhausted
/// answer inside the budget; the randomized engine restarts greedily and can
/// only distinguish found from budget.
inline SearchOutcome search(const SearchConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("search: need n >= 2");
    if (cfg.N_min < 2 || cfg.N_max < cfg.N_min) throw std::invalid_argument("search: bad N range");
    if (cfg.profile.girth_floor != 6 && cfg.profile.girth_floor != 8)
        throw std::invalid_argument("search: profile girth floor must be 6 or 8");

    SearchOutcome out;
    std::mt19937_64 rng(cfg.random_seed);
    bool all_exhausted = true;

    for (int N = cfg.N_min; N <= cfg.N_max; ++N) {
        detail::IncrementalChecker chk(cfg.profile, 4, cfg.n, N);
        auto plan = detail::make_plan(cfg, N);
        if (!detail::plan_is_consistent(plan, chk)) continue;  // seed already violates at this N

        if (plan.free_cells.empty()) {
            out.status = SearchOutcome::Status::Found;
            out.matrix = plan.B;
            out.N = N;
            return out;
        }

        if (cfg.engine == SearchConfig::Engine::Complete) {
            bool budget_hit = false;
            auto dfs = [&](auto&& self, size_t k) -> bool {
                if (k == plan.free_cells.size()) return true;
                auto [i, j] = plan.free_cells[k];
                plan.placed[i][j] = true;
                for (int v = 0; v < N; ++v) {
                    if (++out.expansions > cfg.budget) {
                        budget_hit = true;
                        break;
                    }
                    plan.B.at(i, j) = v;
                    if (chk.violates(plan.B, plan.placed, i, j)) continue;
                    if (self(self, k + 1)) return true;
                    if (budget_hit) break;
                }
                plan.placed[i][j] = false;
                return false;
            };
            if (dfs(dfs, 0)) {
                out.status = SearchOutcome::Status::Found;
                out.matrix = plan.B;
                out.N = N;
                auto rep = check_profile(*out.matrix, cfg.profile);
                if (!rep.pass) throw std::logic_error("search: found matrix fails full profile check");
                return out;
            }
            if (budget_hit) {
                out.status = SearchOutcome::Status::Budget;
                return out;
            }
        } else {
            // greedy randomized restarts with an even budget slice per N:
            // pick a random admissible value per cell, restart on dead ends;
            // no completeness claim at any N. Fisher-Yates with raw draws so
            // runs reproduce across standard libraries.
            all_exhausted = false;
            const long long slice = std::max<long long>(1, cfg.budget / (cfg.N_max - cfg.N_min + 1));
            const long long stop = std::min(cfg.budget, out.expansions + slice);
            std::vector<int> vals(N);
            std::iota(vals.begin(), vals.end(), 0);
            auto shuffle_vals = [&]() {
                for (int k = N - 1; k > 0; --k)
                    std::swap(vals[k], vals[rng() % static_cast<uint64_t>(k + 1)]);
            };
            while (out.expansions < stop) {
                ++out.restarts;
                bool dead = false;
                for (size_t k = 0; k < plan.free_cells.size() && !dead; ++k) {
                    auto [i, j] = plan.free_cells[k];
                    plan.placed[i][j] = true;
                    shuffle_vals();
                    dead = true;
                    for (int v : vals) {
                        if (++out.expansions > stop) break;
                        plan.B.at(i, j) = v;
                        if (!chk.violates(plan.B, plan.placed, i, j)) {
                            dead = false;
                            break;
                        }
                    }
                    if (dead) plan.placed[i][j] = false;
                }
                if (!dead) {
                    out.status = SearchOutcome::Status::Found;
                    out.matrix = plan.B;
                    out.N = N;
                    auto rep = check_profile(*out.matrix, cfg.profile);
                    if (!rep.pass) throw std::logic_error("search: found matrix fails full profile check");
                    return out;
                }
                for (auto [i, j] : plan.free_cells) plan.placed[i][j] = false;
            }
        }
    }
    out.status = all_exhausted ? SearchOutcome::Status::Exhausted : SearchOutcome::Status::Budget;
    return out;
}

}  // namespace qcl
