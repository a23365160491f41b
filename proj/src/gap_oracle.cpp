#include "matchgap/gap_oracle.hpp"

#include <algorithm>

namespace matchgap {

namespace {

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const EdgeSet& a, const EdgeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

GapProfile gap_profile(const Graph& g, const EnumOptions& options) {
    GapProfile out;
    out.nu = nu(g);
    bool first = true;
    out.matchings_examined = enumerate_maximum_matchings(
        g,
        [&](const EdgeSet& F) {
            const int r = nu(delete_edges(g, F));
            if (first) {
                out.L = out.l = r;
                out.F_L = out.F_l = F;
                first = false;
                return;
            }
            if (r > out.L) {
                out.L = r;
                out.F_L = F;
            }
            if (r < out.l) {
                out.l = r;
                out.F_l = F;
            }
        },
        options);
    return out;
}

PairwiseBoundReport check_pairwise_bound(const Graph& g, const EnumOptions& options) {
    // max <= 2 min over the residual matching numbers settles every ordered
    // pair at once; the extreme pair is the binding one.
    const GapProfile p = gap_profile(g, options);
    if (p.L > 2 * p.l)
        fail(errc::invariant_violation,
             "pairwise bound broken: " + std::to_string(p.L) + " > 2*" + std::to_string(p.l));
    PairwiseBoundReport report;
    report.L = p.L;
    report.l = p.l;
    report.tight_F = p.F_l;
    report.tight_F_prime = p.F_L;
    report.matchings_examined = p.matchings_examined;
    return report;
}

PerfectMatchingBoundReport check_perfect_matching_bound(const Graph& g,
                                                        const EnumOptions& options) {
    PerfectMatchingBoundReport report;
    report.nu = nu(g);
    report.applicable = (2 * report.nu == g.vertex_count());
    if (!report.applicable) return report;
    const GapProfile p = gap_profile(g, options);
    report.L = p.L;
    report.l = p.l;
    if (2 * p.L > 3 * p.l)
        fail(errc::invariant_violation, "perfect-matching bound broken: 2*" +
                                            std::to_string(p.L) + " > 3*" + std::to_string(p.l));
    return report;
}

PendantReductionTrace pendant_reduction(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    auto alive_degree = [&](int v) {
        int d = 0;
        for (int w : g.neighbors(v)) d += alive[w];
        return d;
    };

    PendantReductionTrace trace;
    for (;;) {
        // lexicographically least (w, u, v): smallest shared neighbour first,
        // then its two smallest alive degree-1 neighbours
        int w = -1, u = -1, v = -1;
        for (int cand = 0; cand < n && w == -1; ++cand) {
            if (!alive[cand]) continue;
            int first = -1;
            for (int nb : g.neighbors(cand)) {
                if (!alive[nb] || alive_degree(nb) != 1) continue;
                if (first == -1) {
                    first = nb;
                } else {
                    w = cand;
                    u = first;
                    v = nb;
                    break;
                }
            }
        }
        if (w == -1) break;
        trace.steps.push_back({u, v, w});
        alive[u] = alive[v] = alive[w] = 0;
    }
    for (int i = 0; i < n; ++i)
        if (!alive[i]) trace.removed.push_back(i);
    trace.residual = delete_vertices(g, trace.removed);
    return trace;
}

namespace {

// Every component of the symmetric difference of two matchings must be a
// path with exactly two edges: 3 vertices, 2 edges, per component.
bool symmetric_difference_is_2paths(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    std::vector<int> verts;
    for (const auto& [x, y] : diff) {
        verts.push_back(x);
        verts.push_back(y);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Edge> relabeled;
    for (const auto& [x, y] : diff) {
        const int rx = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) -
                                        verts.begin());
        const int ry = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), y) -
                                        verts.begin());
        relabeled.emplace_back(rx, ry);
    }
    const Graph h(static_cast<int>(verts.size()), relabeled);
    for (const auto& comp : connected_components(h)) {
        if (comp.size() != 3) return false;
        int edges_inside = 0;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                edges_inside += h.has_edge(comp[i], comp[j]);
        if (edges_inside != 2) return false;
    }
    return true;
}

}  // namespace

ExtremalStructureReport extremal_structure_check(const Graph& g, const EnumOptions& options) {
    const int n = g.vertex_count();
    if (n < 3) fail(errc::not_applicable, "structure check needs at least 3 vertices");
    if (connected_components(g).size() != 1)
        fail(errc::not_applicable, "structure check needs a connected graph");

    const GapProfile profile = gap_profile(g, options);
    if (profile.L != 2 * profile.l)
        fail(errc::not_applicable, "structure check applies only when the gap is exactly 2:1");

    // no two degree-1 vertices may share a neighbour
    for (int w = 0; w < n; ++w) {
        int pendants = 0;
        for (int nb : g.neighbors(w)) pendants += g.degree(nb) == 1;
        if (pendants >= 2)
            fail(errc::invariant_violation,
                 "pendant siblings at vertex " + std::to_string(w) + " despite a 2:1 gap");
    }

    std::vector<EdgeSet> extremal_L, extremal_l;
    enumerate_maximum_matchings(
        g,
        [&](const EdgeSet& F) {
            const int r = nu(delete_edges(g, F));
            if (r == profile.L) extremal_L.push_back(F);
            if (r == profile.l) extremal_l.push_back(F);
        },
        options);

    ExtremalStructureReport report;
    report.L = profile.L;
    report.l = profile.l;
    report.extremal_L_count = static_cast<std::int64_t>(extremal_L.size());
    report.extremal_l_count = static_cast<std::int64_t>(extremal_l.size());

    for (const EdgeSet& F_L : extremal_L) {
        // all maximum matchings H_L of G \ F_L, each of size L
        std::vector<EdgeSet> h_matchings;
        enumerate_maximum_matchings(
            delete_edges(g, F_L), [&](const EdgeSet& H) { h_matchings.push_back(H); }, options);
        report.h_matchings_checked += static_cast<std::int64_t>(h_matchings.size());

        for (const EdgeSet& F_l : extremal_l) {
            ++report.pairs_checked;

            std::vector<char> covered(n, 0);
            for (const auto& [a, b] : F_L) covered[a] = covered[b] = 1;
            for (const auto& [a, b] : F_l) covered[a] = covered[b] = 1;
            if (std::find(covered.begin(), covered.end(), 0) != covered.end())
                fail(errc::invariant_violation,
                     "extremal pair fails to cover every vertex");

            if (!symmetric_difference_is_2paths(F_L, F_l))
                fail(errc::invariant_violation,
                     "extremal pair has a symmetric-difference component that is not a "
                     "two-edge path");

            // a matching of G \ F_l has at most l = nu(G \ F_l) edges, so a
            // size check settles maximality
            if (static_cast<int>(set_difference(F_L, F_l).size()) != profile.l)
                fail(errc::invariant_violation,
                     "difference of the extremal matchings is not maximum after removing "
                     "the minimiser");

            for (const EdgeSet& H_L : h_matchings) {
                if (!is_subset(set_difference(F_l, F_L), H_L))
                    fail(errc::invariant_violation,
                         "minimiser edges outside the maximiser are missing from a "
                         "residual maximum matching");
                if (static_cast<int>(set_difference(H_L, F_l).size()) != profile.l)
                    fail(errc::invariant_violation,
                         "residual maximum matching minus the minimiser is not maximum");
            }
        }
    }
    return report;
}

}  // namespace matchgap
