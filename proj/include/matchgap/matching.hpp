#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "matchgap/graph.hpp"

namespace matchgap {

/// A matching of a host graph: pairwise non-adjacent edges plus the derived
/// covered-vertex bitmap.
struct Matching {
    EdgeSet edges;
    std::vector<char> covered;

    int size() const { return static_cast<int>(edges.size()); }
};

bool is_matching(const Graph& g, const EdgeSet& edges);
Matching make_matching(const Graph& g, EdgeSet edges);

/// Alternating path with an odd number of edges and both endpoints
/// uncovered; even-positioned edges (0-based) are outside the matching.
struct AugmentingPath {
    std::vector<int> vertices;
};

std::optional<AugmentingPath> find_augmenting_path(const Graph& g, const Matching& m);

/// Symmetric difference with the path's edges; grows the matching by one.
Matching augment(const Graph& g, const Matching& m, const AugmentingPath& path);

Matching maximum_matching(const Graph& g);
int nu(const Graph& g);

struct EnumOptions {
    int limit = 20;             // size guard on the vertex count
    bool force = false;         // lift the guard
    int exact_bound_depth = 4;  // below this depth the pruning bound is an exact matching-number call
};

using MatchingVisitor = std::function<void(const EdgeSet&)>;

/// Visits every maximum matching exactly once, in lexicographic edge-index
/// order. Returns the count. Throws errc::size_guard when the graph exceeds
/// the configured limit and force is unset.
std::int64_t enumerate_maximum_matchings(const Graph& g, const MatchingVisitor& visit,
                                         const EnumOptions& options = {});

/// Visits every perfect matching exactly once (branching on the smallest
/// uncovered vertex). Returns the count.
std::int64_t enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit,
                                         int limit = 36, bool force = false);

}  // namespace matchgap
