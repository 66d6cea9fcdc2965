// Walk through the library end to end: search for an exponent matrix under
// the girth-6 constraint profile, then certify the result independently
// (girth over both routes, forbidden cycle patterns, trapping-set search).

#include <cstdio>

#include "qcl/qcl.hpp"

int main() {
    using namespace qcl;

    SearchConfig cfg;
    cfg.n = 5;
    cfg.profile = profile_by_name("girth6-ets-free");
    cfg.N_min = 2;
    cfg.N_max = 13;
    auto out = search(cfg);
    if (out.status != SearchOutcome::Status::Found) {
        std::puts("search failed");
        return 1;
    }
    std::printf("found a 4x%d matrix at N=%d (%lld placements):\n%s", cfg.n, out.N, out.expansions,
                print_exponent_matrix(*out.matrix).c_str());

    const auto& B = *out.matrix;
    auto G = lift(B);
    std::printf("girth: cycle condition says %d, BFS on the lift says %d\n",
                exponent_girth(B, 12).value_or(-1), bfs_girth(G, 12).value_or(-1));
    std::printf("6-cycles on rows {1,2,3}: %ld, {1,2,4}: %ld, {1,3,4}: %ld, {2,3,4}: %ld\n",
                count_6cycles_by_row_set(B, {0, 1, 2}), count_6cycles_by_row_set(B, {0, 1, 3}),
                count_6cycles_by_row_set(B, {0, 2, 3}), count_6cycles_by_row_set(B, {1, 2, 3}));

    EtsQuery q;
    q.a_max = 6;
    q.b_max = 4;
    auto cert = find_ets(G, q);
    std::printf("trapping sets up to a=6, b<=4: %zu records, %lld expansions\n", cert.records.size(),
                cert.expansions);
    for (const auto& r : cert.records)
        if ((r.a == 5 && r.b <= 4) || (r.a == 6 && r.b <= 2)) {
            std::puts("unexpected small trapping set");
            return 1;
        }
    std::puts("certified: no (5,b<=4) and no (6,b<=2) elementary trapping sets");
    return 0;
}
