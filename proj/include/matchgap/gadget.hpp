#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "matchgap/graph.hpp"

namespace matchgap {

/// Triangle inflation of a cubic graph: every vertex v becomes the triangle
/// {3v, 3v+1, 3v+2}; the edge to the k-th sorted neighbour of v (k = 0,1,2)
/// attaches at 3v+k, so the three original edges land on distinct corners.
struct Inflation {
    Graph base;
    Graph inflated;
    std::vector<std::array<int, 3>> vertex_map;   // base vertex -> its triangle
    std::vector<std::pair<Edge, Edge>> edge_map;  // base edge -> inflated edge
};

Inflation inflate(const Graph& g);

struct CensusOptions {
    int limit = 36;  // size guard on the vertex count of the censused graph
    bool force = false;
};

using EdgeSetVisitor = std::function<void(const EdgeSet&)>;

/// The 2-factors of a cubic graph are exactly the complements of its
/// perfect matchings; visits each one once. Returns the count.
std::int64_t enumerate_2_factors(const Graph& g, const EdgeSetVisitor& visit,
                                 const CensusOptions& options = {});

struct TwoFactorStats {
    std::int64_t count = 0;
    int w = -1;  // minimum odd-cycle count over 2-factors; -1 when none exist
    int W = -1;  // maximum odd-cycle count
    EdgeSet witness_min;
    EdgeSet witness_max;
};

TwoFactorStats odd_cycle_stats(const Graph& g, const CensusOptions& options = {});

struct EdgeColoring3 {
    std::vector<int> color;  // aligned with Graph::edges(), values 0..2
};

/// Proper 3-edge-colouring of a cubic graph via backtracking with a
/// most-constrained-edge heuristic, or nothing when none exists.
std::optional<EdgeColoring3> three_edge_colorable(const Graph& g);

struct InflationGap {
    int L = 0;
    int l = 0;
    TwoFactorStats stats;
};

/// Closed forms for an inflation with a perfect matching:
/// L = (|V| - w) / 2 and l = (|V| - W) / 2 from the 2-factor census.
/// Throws errc::invariant_violation when no perfect matching exists.
InflationGap inflation_L_l(const Inflation& inflation, const CensusOptions& options = {});

struct ReductionReport {
    bool base_colorable = false;
    bool inflated_colorable = false;
    bool ratio_holds = false;  // 2L == 3l on the inflation
    bool consistent = false;   // both biconditionals below hold
    int L = 0;
    int l = 0;
    int w = 0;
    int W = 0;
    std::int64_t two_factor_count = 0;
};

/// For a bridgeless cubic base graph, checks two equivalences by
/// independent routes: the base is 3-edge-colourable iff its inflation has
/// 2L = 3l, and w = 0 iff the inflation itself is 3-edge-colourable.
ReductionReport reduction_check(const Graph& g, const CensusOptions& options = {});

}  // namespace matchgap
