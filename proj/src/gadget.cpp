#include "matchgap/gadget.hpp"

#include <algorithm>

#include "matchgap/matching.hpp"

namespace matchgap {

namespace {

void require_cubic(const Graph& g, const char* what) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            fail(errc::not_cubic, std::string(what) + ": vertex " + std::to_string(v) +
                                      " has degree " + std::to_string(g.degree(v)));
}

int rank_in_neighbors(const Graph& g, int v, int target) {
    const auto& nb = g.neighbors(v);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), target) - nb.begin());
}

}  // namespace

Inflation inflate(const Graph& g) {
    require_cubic(g, "inflate");
    Inflation out;
    out.base = g;
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out.vertex_map.push_back({3 * v, 3 * v + 1, 3 * v + 2});
        edges.emplace_back(3 * v, 3 * v + 1);
        edges.emplace_back(3 * v, 3 * v + 2);
        edges.emplace_back(3 * v + 1, 3 * v + 2);
    }
    for (const auto& [u, v] : g.edges()) {
        // the edge to the k-th sorted neighbour leaves from triangle corner k
        const Edge lifted = make_edge(3 * u + rank_in_neighbors(g, u, v),
                                      3 * v + rank_in_neighbors(g, v, u));
        edges.push_back(lifted);
        out.edge_map.emplace_back(Edge{u, v}, lifted);
    }
    out.inflated = Graph(3 * g.vertex_count(), edges);
    return out;
}

std::int64_t enumerate_2_factors(const Graph& g, const EdgeSetVisitor& visit,
                                 const CensusOptions& options) {
    require_cubic(g, "2-factor census");
    return enumerate_perfect_matchings(
        g,
        [&](const EdgeSet& pm) {
            EdgeSet factor;
            std::set_difference(g.edges().begin(), g.edges().end(), pm.begin(), pm.end(),
                                std::back_inserter(factor));
            visit(factor);
        },
        options.limit, options.force);
}

namespace {

// Cycle walk over a spanning 2-regular edge set.
int odd_cycle_count(const Graph& g, const EdgeSet& factor) {
    const int n = g.vertex_count();
    std::vector<std::array<int, 2>> next(n, {-1, -1});
    for (const auto& [a, b] : factor) {
        next[a][next[a][0] == -1 ? 0 : 1] = b;
        next[b][next[b][0] == -1 ? 0 : 1] = a;
    }
    std::vector<char> seen(n, 0);
    int odd = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int length = 0, prev = -1, v = start;
        do {
            seen[v] = 1;
            ++length;
            const int forward = next[v][0] == prev ? next[v][1] : next[v][0];
            prev = v;
            v = forward;
        } while (v != start);
        odd += length % 2;
    }
    return odd;
}

}  // namespace

TwoFactorStats odd_cycle_stats(const Graph& g, const CensusOptions& options) {
    TwoFactorStats stats;
    stats.count = enumerate_2_factors(
        g,
        [&](const EdgeSet& factor) {
            const int odd = odd_cycle_count(g, factor);
            if (stats.w == -1 || odd < stats.w) {
                stats.w = odd;
                stats.witness_min = factor;
            }
            if (stats.W == -1 || odd > stats.W) {
                stats.W = odd;
                stats.witness_max = factor;
            }
        },
        options);
    return stats;
}

std::optional<EdgeColoring3> three_edge_colorable(const Graph& g) {
    require_cubic(g, "3-edge-colouring");
    const int m = g.edge_count();
    EdgeColoring3 result;
    result.color.assign(m, -1);
    if (m == 0) return result;

    std::vector<std::vector<int>> touching(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& [a, b] = g.edges()[i];
            const auto& [c, d] = g.edges()[j];
            if (a == c || a == d || b == c || b == d) {
                touching[i].push_back(j);
                touching[j].push_back(i);
            }
        }

    auto& color = result.color;
    auto available = [&](int e) {
        std::array<bool, 3> free{true, true, true};
        for (int other : touching[e])
            if (color[other] != -1) free[color[other]] = false;
        return free;
    };

    // colours are interchangeable: pin the first edge and one of its
    // neighbours to kill the 6-fold relabelling symmetry
    color[0] = 0;
    color[touching[0].front()] = 1;

    auto solve = [&](auto&& self) -> bool {
        int best = -1, best_count = 4;
        std::array<bool, 3> best_free{};
        for (int e = 0; e < m; ++e) {
            if (color[e] != -1) continue;
            const auto free = available(e);
            const int count = free[0] + free[1] + free[2];
            if (count < best_count) {
                best = e;
                best_count = count;
                best_free = free;
            }
        }
        if (best == -1) return true;  // everything coloured
        if (best_count == 0) return false;
        for (int c = 0; c < 3; ++c) {
            if (!best_free[c]) continue;
            color[best] = c;
            if (self(self)) return true;
            color[best] = -1;
        }
        return false;
    };
    if (!solve(solve)) return std::nullopt;
    return result;
}

InflationGap inflation_L_l(const Inflation& inflation, const CensusOptions& options) {
    const Graph& g = inflation.inflated;
    const int n = g.vertex_count();
    if (2 * nu(g) != n)
        fail(errc::invariant_violation,
             "inflated graph lacks a perfect matching; the closed forms do not apply");
    InflationGap gap;
    gap.stats = odd_cycle_stats(g, options);
    // both counts share the parity of n (each odd cycle flips it), so the
    // divisions are exact
    gap.L = (n - gap.stats.w) / 2;
    gap.l = (n - gap.stats.W) / 2;
    return gap;
}

ReductionReport reduction_check(const Graph& g, const CensusOptions& options) {
    require_cubic(g, "reduction check");
    if (!is_bridgeless(g)) fail(errc::has_bridge, "reduction check needs a bridgeless graph");

    const Inflation inflation = inflate(g);
    const InflationGap gap = inflation_L_l(inflation, options);

    ReductionReport report;
    report.base_colorable = three_edge_colorable(g).has_value();
    report.inflated_colorable = three_edge_colorable(inflation.inflated).has_value();
    report.ratio_holds = (2 * gap.L == 3 * gap.l);
    report.L = gap.L;
    report.l = gap.l;
    report.w = gap.stats.w;
    report.W = gap.stats.W;
    report.two_factor_count = gap.stats.count;

    if (report.base_colorable != report.ratio_holds)
        fail(errc::invariant_violation,
             "colourability of the base disagrees with the 3:2 gap of its inflation");
    if ((report.w == 0) != report.inflated_colorable)
        fail(errc::invariant_violation,
             "all-even 2-factor existence disagrees with inflation colourability");
    report.consistent = true;
    return report;
}

}  // namespace matchgap
