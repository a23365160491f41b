#include <algorithm>

#include "doctest.h"
#include "matchgap/gap_oracle.hpp"
#include "support/checks.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace matchgap;
using checks::thrown_code;

namespace {

// Ground-truth L and l straight from the definitions: enumerate the maximum
// matchings by brute force and take nu of each edge-removed remainder.
std::pair<int, int> brute_gap(const Graph& g) {
    int L = -1, l = -1;
    for (const auto& f : oracles::brute_maximum_matchings(g)) {
        EdgeSet rest;
        for (const auto& e : g.edges())
            if (!std::binary_search(f.begin(), f.end(), e)) rest.push_back(e);
        const int r = oracles::exhaustive_nu(Graph(g.vertex_count(), rest));
        L = std::max(L, r);
        l = (l == -1) ? r : std::min(l, r);
    }
    return {L, l};
}

}  // namespace

TEST_CASE("gap profiles of the named graphs") {
    auto profile = [](const Graph& g) { return gap_profile(g); };

    GapProfile p5 = profile(corpus::path_graph(5));
    CHECK(p5.nu == 2);
    CHECK(p5.L == 2);
    CHECK(p5.l == 1);
    CHECK(p5.matchings_examined == 3);
    CHECK(p5.F_L == EdgeSet{{0, 1}, {2, 3}});
    CHECK(p5.F_l == EdgeSet{{0, 1}, {3, 4}});

    GapProfile p3 = profile(corpus::path_graph(3));
    CHECK(p3.nu == 1);
    CHECK(p3.L == 1);
    CHECK(p3.l == 1);
    CHECK(p3.matchings_examined == 2);

    GapProfile p4 = profile(corpus::path_graph(4));
    CHECK(p4.nu == 2);
    CHECK(p4.L == 1);
    CHECK(p4.l == 1);
    CHECK(p4.matchings_examined == 1);

    GapProfile k4 = profile(corpus::complete_graph(4));
    CHECK(k4.nu == 2);
    CHECK(k4.L == 2);
    CHECK(k4.l == 2);
    CHECK(k4.matchings_examined == 3);

    GapProfile twt = profile(corpus::triangle_with_tail());
    CHECK(twt.nu == 2);
    CHECK(twt.L == 2);
    CHECK(twt.l == 1);
    CHECK(twt.matchings_examined == 4);
    CHECK(twt.F_L == EdgeSet{{0, 1}, {2, 3}});
    CHECK(twt.F_l == EdgeSet{{0, 1}, {3, 4}});

    GapProfile star = profile(corpus::star_graph(3));
    CHECK(star.nu == 1);
    CHECK(star.L == 1);
    CHECK(star.l == 1);
    CHECK(star.matchings_examined == 3);

    GapProfile paw = profile(corpus::paw());
    CHECK(paw.nu == 2);
    CHECK(paw.L == 1);
    CHECK(paw.l == 1);
    CHECK(paw.matchings_examined == 1);

    GapProfile c4 = profile(corpus::cycle_graph(4));
    CHECK(c4.L == 2);
    CHECK(c4.l == 2);
    CHECK(c4.matchings_examined == 2);

    GapProfile c6 = profile(corpus::cycle_graph(6));
    CHECK(c6.L == 3);
    CHECK(c6.l == 3);

    GapProfile k33 = profile(corpus::complete_bipartite(3, 3));
    CHECK(k33.nu == 3);
    CHECK(k33.L == 3);
    CHECK(k33.l == 3);
    CHECK(k33.matchings_examined == 6);

    GapProfile pet = profile(corpus::petersen());
    CHECK(pet.nu == 5);
    CHECK(pet.L == 4);
    CHECK(pet.l == 4);
    CHECK(pet.matchings_examined == 6);

    GapProfile prism = profile(corpus::prism());
    CHECK(prism.nu == 3);
    CHECK(prism.L == 3);
    CHECK(prism.l == 2);
    CHECK(prism.matchings_examined == 4);
}

TEST_CASE("gap profile degenerate cases") {
    GapProfile empty = gap_profile(Graph(2, {}));
    CHECK(empty.nu == 0);
    CHECK(empty.L == 0);
    CHECK(empty.l == 0);
    CHECK(empty.matchings_examined == 1);  // the empty matching

    GapProfile lone = gap_profile(Graph(4, {{0, 1}}));
    CHECK(lone.nu == 1);
    CHECK(lone.L == 0);
    CHECK(lone.l == 0);

    // Options pass straight through to the enumerator.
    const Graph big = corpus::star_graph(21);
    CHECK(thrown_code([&] { gap_profile(big); }) == errc::size_guard);
    EnumOptions forced;
    forced.force = true;
    GapProfile star = gap_profile(big, forced);
    CHECK(star.nu == 1);
    CHECK(star.L == 1);
    CHECK(star.l == 1);
    CHECK(star.matchings_examined == 21);
}

TEST_CASE("gap profile matches the brute-force definition on all small graphs") {
    for (int n = 1; n <= 5; ++n) {
        corpus::for_each_connected_graph(n, [&](const Graph& g) {
            const auto [L, l] = brute_gap(g);
            GapProfile p = gap_profile(g);
            REQUIRE(p.L == L);
            REQUIRE(p.l == l);
            REQUIRE(p.L <= 2 * p.l);  // the ratio bound, exhaustively
        });
    }
}

TEST_CASE("pairwise bound report") {
    PairwiseBoundReport r = check_pairwise_bound(corpus::path_graph(5));
    CHECK(r.L == 2);
    CHECK(r.l == 1);
    CHECK(r.tight_F == EdgeSet{{0, 1}, {3, 4}});
    CHECK(r.tight_F_prime == EdgeSet{{0, 1}, {2, 3}});
    CHECK(r.matchings_examined == 3);

    // Never throws on honest input; spot-check a random batch.
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = corpus::random_connected(3 + trial % 8, 12000 + trial);
        PairwiseBoundReport b = check_pairwise_bound(g);
        CHECK(b.L <= 2 * b.l);
    }
}

TEST_CASE("perfect-matching bound report") {
    PerfectMatchingBoundReport p5 = check_perfect_matching_bound(corpus::path_graph(5));
    CHECK_FALSE(p5.applicable);
    CHECK(p5.nu == 2);

    PerfectMatchingBoundReport paw = check_perfect_matching_bound(corpus::paw());
    CHECK(paw.applicable);
    CHECK(paw.nu == 2);
    CHECK(paw.L == 1);
    CHECK(paw.l == 1);

    PerfectMatchingBoundReport prism = check_perfect_matching_bound(corpus::prism());
    CHECK(prism.applicable);
    CHECK(prism.L == 3);
    CHECK(prism.l == 2);  // 2L = 6 = 3l, tight

    PerfectMatchingBoundReport pet = check_perfect_matching_bound(corpus::petersen());
    CHECK(pet.applicable);
    CHECK(2 * pet.L <= 3 * pet.l);

    CHECK_FALSE(check_perfect_matching_bound(corpus::path_graph(3)).applicable);
    CHECK_FALSE(check_perfect_matching_bound(corpus::triangle_with_tail()).applicable);
}

TEST_CASE("pendant-sibling reduction traces") {
    PendantReductionTrace p3 = pendant_reduction(corpus::path_graph(3));
    REQUIRE(p3.k() == 1);
    CHECK(p3.steps[0] == std::array<int, 3>{0, 2, 1});
    CHECK(p3.removed == VertexSet{0, 1, 2});
    CHECK(p3.residual.graph.vertex_count() == 0);

    PendantReductionTrace star = pendant_reduction(corpus::star_graph(3));
    REQUIRE(star.k() == 1);
    CHECK(star.steps[0] == std::array<int, 3>{1, 2, 0});
    CHECK(star.removed == VertexSet{0, 1, 2});
    CHECK(star.residual.graph.vertex_count() == 1);  // leaf 3 survives, isolated
    CHECK(star.residual.new_to_old == std::vector<int>{3});

    // Two rounds: removing the first triple exposes the second star.
    Graph chain(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
    PendantReductionTrace two = pendant_reduction(chain);
    REQUIRE(two.k() == 2);
    CHECK(two.steps[0] == std::array<int, 3>{1, 2, 0});
    CHECK(two.steps[1] == std::array<int, 3>{4, 5, 3});
    CHECK(two.removed == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(two.residual.graph.vertex_count() == 0);

    // No pendant siblings anywhere: the tail vertices have distinct supports.
    CHECK(pendant_reduction(corpus::path_graph(5)).k() == 0);
    CHECK(pendant_reduction(corpus::triangle_with_tail()).k() == 0);
    CHECK(pendant_reduction(corpus::petersen()).k() == 0);
}

TEST_CASE("each pendant reduction step lowers L and l by exactly one") {
    for (int trial = 0; trial < 50; ++trial) {
        // Random connected core plus two fresh leaves on vertex 0.
        const Graph core = corpus::random_connected(3 + trial % 6, 21000 + trial);
        const int n = core.vertex_count();
        std::vector<Edge> edges = core.edges();
        edges.push_back({0, n});
        edges.push_back({0, n + 1});
        const Graph g(n + 2, edges);

        PendantReductionTrace trace = pendant_reduction(g);
        REQUIRE(trace.k() >= 1);
        const GapProfile before = gap_profile(g);

        // Undo all but the first step: apply exactly one removal by hand.
        const auto [u, v, w] = trace.steps[0];
        const GapProfile after = gap_profile(delete_vertices(g, {u, v, w}).graph);
        REQUIRE(after.L == before.L - 1);
        REQUIRE(after.l == before.l - 1);
    }
}

TEST_CASE("extremal structure holds whenever the gap is exactly 2:1") {
    ExtremalStructureReport p5 = extremal_structure_check(corpus::path_graph(5));
    CHECK(p5.L == 2);
    CHECK(p5.l == 1);
    CHECK(p5.extremal_L_count == 2);
    CHECK(p5.extremal_l_count == 1);
    CHECK(p5.pairs_checked == 2);
    CHECK(p5.h_matchings_checked == 2);

    ExtremalStructureReport twt = extremal_structure_check(corpus::triangle_with_tail());
    CHECK(twt.L == 2);
    CHECK(twt.l == 1);
    CHECK(twt.extremal_L_count == 3);
    CHECK(twt.extremal_l_count == 1);
    CHECK(twt.pairs_checked == 3);
    CHECK(twt.h_matchings_checked == 4);

    CHECK(thrown_code([] { extremal_structure_check(corpus::path_graph(4)); }) ==
          errc::not_applicable);  // L = l = 1
    CHECK(thrown_code([] { extremal_structure_check(corpus::cycle_graph(4)); }) ==
          errc::not_applicable);  // L = l = 2
    CHECK(thrown_code([] { extremal_structure_check(corpus::path_graph(2)); }) ==
          errc::not_applicable);  // too small, despite L = 2l = 0
    CHECK(thrown_code([] { extremal_structure_check(Graph(6, {{0, 1}, {2, 3}, {4, 5}})); }) ==
          errc::not_applicable);  // disconnected
}

TEST_CASE("extremal structure sweep over the applicable small graphs") {
    int applicable = 0;
    for (int n = 3; n <= 5; ++n) {
        corpus::for_each_connected_graph(n, [&](const Graph& g) {
            const GapProfile p = gap_profile(g);
            if (p.L != 2 * p.l) return;
            ExtremalStructureReport r = extremal_structure_check(g);  // must not throw
            REQUIRE(r.L == p.L);
            REQUIRE(r.pairs_checked >= 1);
            ++applicable;
        });
    }
    CHECK(applicable > 100);  // the sweep genuinely exercises the checker
}
