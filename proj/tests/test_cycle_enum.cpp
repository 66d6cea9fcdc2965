#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qcl/cycle_enum.hpp"
#include "qcl/fixtures.hpp"
#include "qcl/tanner_graph.hpp"
#include "support/oracles.hpp"

using namespace qcl;

namespace {

ExponentMatrix random_matrix(std::mt19937& rng, int m, int n, int N) {
    ExponentMatrix B(m, n, N);
    for (auto& e : B.entries) e = rng() % N;
    return B;
}

}  // namespace

TEST_CASE("cycle solutions on the reference matrices") {
    const auto& g6 = fixture_by_name("table1-g6-n5").matrix;
    REQUIRE(enumerate_cycle_solutions(g6, 2).empty());
    REQUIRE_FALSE(enumerate_cycle_solutions(g6, 3).empty());

    const auto& g8 = fixture_by_name("table1-g8-n5").matrix;
    REQUIRE(enumerate_cycle_solutions(g8, 2).empty());
    REQUIRE(enumerate_cycle_solutions(g8, 3).empty());
    REQUIRE_FALSE(enumerate_cycle_solutions(g8, 4).empty());
}

TEST_CASE("duplicate rows produce 4-cycle solutions") {
    auto B = parse_exponent_matrix("2 2 7\n3 5\n3 5\n");
    auto ws = enumerate_cycle_solutions(B, 2);
    REQUIRE_FALSE(ws.empty());
    for (const auto& w : ws) {
        REQUIRE(w.length() == 4);
        REQUIRE(w.slots[0].row != w.slots[1].row);
        REQUIRE(w.slots[0].col != w.slots[1].col);
    }
}

TEST_CASE("exponent girth on fixtures and degenerate shapes") {
    REQUIRE(exponent_girth(fixture_by_name("table1-g6-n6").matrix, 12) == 6);
    REQUIRE(exponent_girth(fixture_by_name("table1-g8-n7").matrix, 12) == 8);
    // one row: adjacent row inequality is unsatisfiable, no cycles at all
    auto single = parse_exponent_matrix("1 4 7\n1 2 3 4\n");
    REQUIRE_FALSE(exponent_girth(single, 12).has_value());
}

TEST_CASE("canonical form is the dihedral minimum and witnesses are valid") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto B = random_matrix(rng, 4, 5, 2 + rng() % 10);
        for (int k : {2, 3}) {
            for (const auto& w : enumerate_cycle_solutions(B, k)) {
                // canonical = min over all transforms, and idempotent
                auto all = slot_transforms(w.slots);
                REQUIRE(*std::min_element(all.begin(), all.end()) == w.slots);
                REQUIRE(canonical_slots(w.slots) == w.slots);
                // adjacent inequality, cyclically
                for (int i = 0; i < k; ++i) {
                    REQUIRE(w.slots[i].row != w.slots[(i + 1) % k].row);
                    REQUIRE(w.slots[i].col != w.slots[(i + 1) % k].col);
                }
                // the defining congruence
                long sum = 0;
                for (int i = 0; i < k; ++i)
                    sum += B.at(w.slots[i].row, w.slots[i].col) - B.at(w.slots[i].row, w.slots[(i + 1) % k].col);
                REQUIRE(sum % B.lift == 0);
            }
        }
    }
}

TEST_CASE("raw solution count equals the sum of canonical orbit sizes") {
    std::mt19937 rng(17);
    for (int t = 0; t < 8; ++t) {
        auto B = random_matrix(rng, 3, 4, 2 + rng() % 8);
        for (int k : {2, 3}) {
            long raw = 0;
            detail::for_each_raw_solution(B, k, [&](SlotSeq) {
                ++raw;
                return true;
            });
            long orbit_total = 0;
            for (const auto& w : enumerate_cycle_solutions(B, k)) {
                auto all = slot_transforms(w.slots);
                orbit_total += static_cast<long>(std::set<SlotSeq>(all.begin(), all.end()).size());
            }
            REQUIRE(raw == orbit_total);
        }
    }
}

TEST_CASE("every 6-cycle witness of a 4-cycle-free matrix uses three distinct rows") {
    for (const char* name : {"table1-g6-n5", "table1-g6-n6", "table1-g6-n7"}) {
        const auto& B = fixture_by_name(name).matrix;
        for (const auto& w : enumerate_cycle_solutions(B, 3)) {
            auto rows = w.row_multiset();
            REQUIRE(rows[0] != rows[1]);
            REQUIRE(rows[1] != rows[2]);
        }
    }
}

TEST_CASE("length-12 detection at the cap boundary") {
    // the 2x2 block with a single unit shift lifts to one long cycle: 4N edges
    auto B = parse_exponent_matrix("2 2 3\n0 0\n0 1\n");
    REQUIRE(enumerate_cycle_solutions(B, 4).empty());
    REQUIRE(enumerate_cycle_solutions(B, 5).empty());
    REQUIRE_FALSE(enumerate_cycle_solutions(B, 6).empty());
    REQUIRE(exponent_girth(B, 14) == 12);
    REQUIRE(bfs_girth(lift(B), 14) == 12);
    REQUIRE_FALSE(exponent_girth(B, 12).has_value());
    REQUIRE_THROWS_AS(exponent_girth(B, 16), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_cycle_solutions(B, 7), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_cycle_solutions(B, 1), std::invalid_argument);
}

TEST_CASE("exponent girth agrees with bfs girth") {
    for (const auto& f : table1_fixtures())
        REQUIRE(exponent_girth(f.matrix, 12) == bfs_girth(lift(f.matrix), 12));

    std::mt19937 rng(2024);
    for (int t = 0; t < 30; ++t) {
        auto B = random_matrix(rng, 4, 5, 2 + rng() % 19);
        REQUIRE(exponent_girth(B, 12) == bfs_girth(lift(B), 12));
    }
}

TEST_CASE("each canonical witness marks exactly N cycles in the lift") {
    SECTION("6-cycles of the n=5 reference matrix") {
        const auto& B = fixture_by_name("table1-g6-n5").matrix;
        auto census = qcl_test::lifted_cycle_census(lift(B), 6);
        std::map<std::vector<int>, long> expected;
        for (const auto& w : enumerate_cycle_solutions(B, 3)) ++expected[w.row_multiset()];
        for (auto& [rows, c] : expected) c *= B.lift;
        REQUIRE(census == expected);
    }
    SECTION("4-cycles of a small random matrix") {
        std::mt19937 rng(5);
        for (int t = 0; t < 5; ++t) {
            auto B = random_matrix(rng, 3, 3, 2 + rng() % 5);
            auto census = qcl_test::lifted_cycle_census(lift(B), 4);
            std::map<std::vector<int>, long> expected;
            for (const auto& w : enumerate_cycle_solutions(B, 2)) ++expected[w.row_multiset()];
            for (auto& [rows, c] : expected) c *= B.lift;
            REQUIRE(census == expected);
        }
    }
}
