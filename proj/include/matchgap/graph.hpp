#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "matchgap/errors.hpp"

namespace matchgap {

// Edges are kept canonical (first < second); edge sets sorted lexicographically.
using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // sorted, duplicate-free
using EdgeSet = std::vector<Edge>;   // sorted, duplicate-free

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction. Loops are rejected; duplicate input edges collapse.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EdgeSet& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_vertex(int v) const { return 0 <= v && v < n_; }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const;  // position in edges(), -1 if absent

private:
    int n_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<int>> adj_;  // sorted neighbour lists
};

/// Induced subgraph after deleting a vertex set, with the relabelling in
/// both directions (surviving vertices keep their relative order).
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for removed vertices
    std::vector<int> new_to_old;
};

VertexDeletion delete_vertices(const Graph& g, const VertexSet& remove);

/// Same vertex set, edges minus the given ones; every edge must exist.
Graph delete_edges(const Graph& g, const EdgeSet& remove);

struct BipartitionResult {
    // One (side_a, side_b) pair per connected component, in order of the
    // component's smallest vertex, which always sits in side_a. Absent when
    // some component contains an odd cycle.
    std::optional<std::vector<std::pair<VertexSet, VertexSet>>> sides;
    std::vector<int> odd_cycle;  // witness cycle (vertex sequence) when sides is absent
};

BipartitionResult bipartition(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

/// All triangles as ascending triples, lexicographically ordered.
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// True when no edge disconnects its component.
bool is_bridgeless(const Graph& g);

}  // namespace matchgap
