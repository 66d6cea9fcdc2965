#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qcl/cycle_enum.hpp"

namespace qcl {

/// 8-cycle row-usage pattern: one row appears twice (necessarily in opposite
/// slots, since adjacent slots use distinct rows) and a second row appears at
/// least once. Rows are 0-based here.
struct DoubledRowPattern {
    int row_double = 0;
    int row_required = 1;
    bool operator==(const DoubledRowPattern&) const = default;
};

inline bool matches_doubled_row(const std::vector<int>& rows, const DoubledRowPattern& p) {
    if (rows.size() != 4) return false;
    auto hit = [&](int a, int b, int c, int d) {
        return rows[a] == p.row_double && rows[c] == p.row_double &&
               (rows[b] == p.row_required || rows[d] == p.row_required);
    };
    return hit(0, 1, 2, 3) || hit(1, 2, 3, 0);
}

/// Number of canonical 6-cycle solutions whose three rows are exactly the
/// given set. Requires a 4-cycle-free matrix: there every length-6 solution
/// has three pairwise distinct rows, so counting by set is unambiguous.
inline long count_6cycles_by_row_set(const ExponentMatrix& B, std::array<int, 3> rows) {
    std::sort(rows.begin(), rows.end());
    if (rows[0] == rows[1] || rows[1] == rows[2]) throw std::invalid_argument("row set must have 3 distinct rows");
    for (int r : rows)
        if (r < 0 || r >= B.rows) throw std::invalid_argument("row index out of range");
    if (has_cycle_solutions(B, 2))
        throw std::invalid_argument("matrix has 4-cycles; 6-cycle row-set counts are undefined");
    long cnt = 0;
    for (const auto& w : enumerate_cycle_solutions(B, 3)) {
        auto ms = w.row_multiset();
        if (ms.size() == 3 && ms[0] == rows[0] && ms[1] == rows[1] && ms[2] == rows[2]) ++cnt;
    }
    return cnt;
}

struct DoubledRowResult {
    bool found = false;
    std::vector<CycleWitness> witnesses;
};

/// Detect length-8 solutions whose row pattern matches (d, x, d, y) up to
/// rotation/reflection with the required row among {x, y}. Requires a 4- and
/// 6-cycle-free matrix so that every solution is a genuine 8-cycle.
inline DoubledRowResult has_8cycle_doubled_row(const ExponentMatrix& B, int r_double, int r_required) {
    if (r_double == r_required) throw std::invalid_argument("doubled and required rows must differ");
    if (r_double < 0 || r_double >= B.rows || r_required < 0 || r_required >= B.rows)
        throw std::invalid_argument("row index out of range");
    if (has_cycle_solutions(B, 2) || has_cycle_solutions(B, 3))
        throw std::invalid_argument("matrix must be 4- and 6-cycle-free");
    DoubledRowResult res;
    DoubledRowPattern p{r_double, r_required};
    for (const auto& w : enumerate_cycle_solutions(B, 4))
        if (matches_doubled_row(w.row_pattern(), p)) {
            res.found = true;
            res.witnesses.push_back(w);
        }
    return res;
}

/// A named bundle of cycle constraints a matrix must satisfy: a girth floor
/// plus forbidden 6-cycle row sets (girth-6 profiles) or a forbidden 8-cycle
/// doubled-row pattern (girth-8 profiles).
struct ConstraintProfile {
    std::string name;
    int girth_floor = 6;
    std::vector<std::array<int, 3>> forbidden_6cycle_row_sets;  ///< 0-based, sorted
    std::optional<DoubledRowPattern> forbid_8cycle_doubled_row;
};

inline const std::vector<ConstraintProfile>& builtin_profiles() {
    static const std::vector<ConstraintProfile> profiles = {
        {"girth6-basic", 6, {}, std::nullopt},
        {"girth6-ets-free", 6, {{{0, 1, 2}}, {{0, 1, 3}}}, std::nullopt},
        {"girth8-basic", 8, {}, std::nullopt},
        {"girth8-ets-free", 8, {}, DoubledRowPattern{0, 1}},
    };
    return profiles;
}

inline const ConstraintProfile& profile_by_name(std::string_view name) {
    for (const auto& p : builtin_profiles())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown profile: " + std::string(name));
}

enum class CheckStatus { Pass, Fail, Skipped };

struct ConstraintCheck {
    std::string constraint;  ///< stable identifier, e.g. "girth>=6", "no-6cycle{1,2,3}"
    CheckStatus status = CheckStatus::Pass;
    long count = 0;                        ///< violating solutions counted, when applicable
    std::optional<CycleWitness> witness;   ///< first violation
};

struct ProfileReport {
    std::string profile;
    bool pass = false;
    std::optional<int> girth;  ///< measured girth below the cap, nullopt = at/above cap
    std::vector<ConstraintCheck> checks;
};

/// Evaluate a profile. Girth is checked first; the pattern constraints are
/// only meaningful on matrices meeting the floor (their preconditions), so
/// they are marked Skipped when the floor already failed.
inline ProfileReport check_profile(const ExponentMatrix& B, const ConstraintProfile& P) {
    B.validate();
    ProfileReport rep;
    rep.profile = P.name;
    const int cap = P.girth_floor + 2;
    rep.girth = exponent_girth(B, cap);

    ConstraintCheck girth_check;
    girth_check.constraint = "girth>=" + std::to_string(P.girth_floor);
    bool girth_ok = !rep.girth.has_value() || *rep.girth >= P.girth_floor;
    girth_check.status = girth_ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!girth_ok) {
        girth_check.witness = first_cycle_solution(B, *rep.girth / 2);
        girth_check.count = 1;
    }
    rep.checks.push_back(std::move(girth_check));

    for (const auto& rs : P.forbidden_6cycle_row_sets) {
        ConstraintCheck c;
        c.constraint = "no-6cycle{" + std::to_string(rs[0] + 1) + "," + std::to_string(rs[1] + 1) + "," +
                       std::to_string(rs[2] + 1) + "}";
        if (!girth_ok) {
            c.status = CheckStatus::Skipped;
        } else {
            for (const auto& w : enumerate_cycle_solutions(B, 3)) {
                auto ms = w.row_multiset();
                if (ms == std::vector<int>{rs[0], rs[1], rs[2]}) {
                    if (!c.witness) c.witness = w;
                    ++c.count;
                }
            }
            c.status = c.count == 0 ? CheckStatus::Pass : CheckStatus::Fail;
        }
        rep.checks.push_back(std::move(c));
    }

    if (P.forbid_8cycle_doubled_row) {
        const auto& p = *P.forbid_8cycle_doubled_row;
        ConstraintCheck c;
        c.constraint = "no-8cycle-doubled{" + std::to_string(p.row_double + 1) + "," +
                       std::to_string(p.row_required + 1) + "}";
        if (!girth_ok) {
            c.status = CheckStatus::Skipped;
        } else {
            auto res = has_8cycle_doubled_row(B, p.row_double, p.row_required);
            c.count = static_cast<long>(res.witnesses.size());
            if (res.found) c.witness = res.witnesses.front();
            c.status = res.found ? CheckStatus::Fail : CheckStatus::Pass;
        }
        rep.checks.push_back(std::move(c));
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        if (c.status != CheckStatus::Pass) rep.pass = false;
    return rep;
}

}  // namespace qcl
