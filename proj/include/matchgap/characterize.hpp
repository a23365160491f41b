#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "matchgap/graph.hpp"

namespace matchgap {

/// The distinguished vertex set V1: all degree-1 vertices plus one chosen
/// degree-2 vertex per triangle that contains at least two of them.
struct V1Selection {
    VertexSet degree_one;
    std::vector<std::array<int, 3>> qualifying_triangles;
    std::vector<int> chosen;  // one vertex per qualifying triangle, aligned
    VertexSet v1;
};

/// Callback deciding which degree-2 vertex represents a qualifying
/// triangle; candidates are ascending. The default takes the smallest.
using TriangleChoice =
    std::function<int(const std::array<int, 3>& triangle, const std::vector<int>& candidates)>;

V1Selection v1_set(const Graph& g);
V1Selection v1_set(const Graph& g, const TriangleChoice& choose);

/// Unit-capacity style network for packing 2-paths in a bipartite graph
/// with sides (X, Y): node 0 is the source, node 1 the sink, then the X
/// nodes and the Y nodes in sorted vertex order. Arcs: source->x with
/// capacity 2, x->y with capacity 1 per edge, y->sink with capacity 1.
struct FlowNetwork {
    struct Arc {
        int from;
        int to;
        int capacity;
    };

    int node_count = 2;
    VertexSet xs, ys;  // graph labels; xs[i] is node 2+i, ys[j] is node 2+|X|+j
    std::vector<Arc> arcs;
};

FlowNetwork build_2path_network(const Graph& h, const VertexSet& x, const VertexSet& y);

struct MaxFlowResult {
    int value = 0;
    std::vector<int> arc_flow;  // aligned with FlowNetwork::arcs
};

/// Shortest-augmenting-path maximum flow (deterministic).
MaxFlowResult max_flow(const FlowNetwork& net);

/// |X| vertex-disjoint paths y - x - y', one centred on each X vertex,
/// when they exist; equivalently when the network's maximum flow is 2|X|.
std::optional<std::vector<std::array<int, 3>>> two_path_packing(const Graph& h, const VertexSet& x,
                                                                const VertexSet& y);

struct CharacterizationCertificate {
    bool verdict = false;
    VertexSet v1;
    VertexSet x_side;
    VertexSet y_side;
    std::vector<std::array<int, 3>> packing;  // (y, x, y') triples; present iff verdict
    int failed_condition = 0;                 // 1, 2 or 3 when verdict is false
    std::string refutation;
    std::vector<int> odd_cycle;  // witness when condition 1 fails
};

/// Polynomial-time test of L(G) = 2l(G). Per connected component with at
/// least three vertices it checks, over the component minus V1:
///   (1) bipartiteness,
///   (2) a side assignment with |Y| = |V1| where every Y vertex has exactly
///       one neighbour in V1,
///   (3) |X| vertex-disjoint 2-paths for that assignment.
/// Components with at most two vertices always satisfy the property and
/// contribute nothing to the certificate's sets.
CharacterizationCertificate check_L_eq_2l(const Graph& g);
CharacterizationCertificate check_L_eq_2l(const Graph& g, const TriangleChoice& choose);

}  // namespace matchgap
