#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "matchgap/graph.hpp"
#include "matchgap/matching.hpp"

namespace matchgap {

/// Exact matching-removal gap numbers with witnesses:
/// L = max and l = min of nu(G \ F) over all maximum matchings F of G,
/// where \ removes the edges of F but keeps every vertex.
struct GapProfile {
    int nu = 0;
    int L = 0;
    int l = 0;
    EdgeSet F_L;  // first maximum matching (lexicographically) attaining L
    EdgeSet F_l;  // first attaining l
    std::int64_t matchings_examined = 0;
};

GapProfile gap_profile(const Graph& g, const EnumOptions& options = {});

struct PairwiseBoundReport {
    int L = 0;
    int l = 0;
    EdgeSet tight_F;        // minimiser: nu(G \ F) = l
    EdgeSet tight_F_prime;  // maximiser: nu(G \ F') = L
    std::int64_t matchings_examined = 0;
};

/// Asserts nu(G\F') <= 2 nu(G\F) for every ordered pair of maximum
/// matchings (equivalently L <= 2l) and reports the tightest pair.
/// Throws errc::invariant_violation on failure.
PairwiseBoundReport check_pairwise_bound(const Graph& g, const EnumOptions& options = {});

struct PerfectMatchingBoundReport {
    bool applicable = false;  // the graph has a perfect matching
    int nu = 0;
    int L = 0;
    int l = 0;
};

/// When a perfect matching exists, asserts 2L <= 3l in integer arithmetic;
/// otherwise reports not applicable.
PerfectMatchingBoundReport check_perfect_matching_bound(const Graph& g,
                                                        const EnumOptions& options = {});

/// Repeatedly removes pendant siblings: two degree-1 vertices u, v sharing
/// the neighbour w. Each removal lowers both L and l by exactly one. The
/// triple chosen at each step is the lexicographically least (w, u, v) in
/// the current graph; steps are recorded in the input labelling.
struct PendantReductionTrace {
    std::vector<std::array<int, 3>> steps;  // (u, v, w) per removal
    VertexSet removed;
    VertexDeletion residual;

    int k() const { return static_cast<int>(steps.size()); }
};

PendantReductionTrace pendant_reduction(const Graph& g);

struct ExtremalStructureReport {
    int L = 0;
    int l = 0;
    std::int64_t extremal_L_count = 0;       // maximum matchings F with nu(G\F) = L
    std::int64_t extremal_l_count = 0;       // ... with nu(G\F) = l
    std::int64_t pairs_checked = 0;          // (F_L, F_l) pairs
    std::int64_t h_matchings_checked = 0;    // maximum matchings of G\F_L examined
};

/// For connected G with n >= 3 and L = 2l, verifies the structure forced on
/// every extremal pair (F_L, F_l) and every maximum matching H_L of G\F_L:
///   - V(F_L) u V(F_l) = V(G)
///   - every component of F_L (+) F_l is a path with two edges
///   - F_l \ F_L is contained in H_L
///   - H_L \ F_l and F_L \ F_l are maximum matchings of G \ F_l
///   - no two degree-1 vertices of G share a neighbour
/// Throws errc::not_applicable when the preconditions fail and
/// errc::invariant_violation when an assertion fails.
ExtremalStructureReport extremal_structure_check(const Graph& g, const EnumOptions& options = {});

}  // namespace matchgap
