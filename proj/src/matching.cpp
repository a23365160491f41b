#include "matchgap/matching.hpp"

#include <algorithm>
#include <queue>

namespace matchgap {

namespace {

// Edmonds' algorithm, contraction handled implicitly through blossom bases:
// a BFS from one free root where same-level collisions contract the cycle by
// repointing every involved vertex at the common base. `p` stores, for each
// even (outer) vertex, the matched vertex through which BFS reached it, so
// alternating p[] with match[] reads the path back.
struct BlossomSearch {
    const Graph& g;
    std::vector<int> match;  // match[v] = partner, -1 if free
    std::vector<int> p, base;
    std::vector<char> used, blossom;

    explicit BlossomSearch(const Graph& graph, const std::vector<int>& matching)
        : g(graph), match(matching) {}

    int lowest_common_base(int a, int b) {
        const int n = g.vertex_count();
        std::vector<char> seen(n, 0);
        for (int v = base[a];; v = base[p[match[v]]]) {
            seen[v] = 1;
            if (match[v] == -1) break;  // reached the root
        }
        for (int v = base[b];; v = base[p[match[v]]]) {
            if (seen[v]) return v;
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    // Returns a free vertex reached from `root` by an augmenting path, or -1.
    int run(int root) {
        const int n = g.vertex_count();
        used.assign(n, 0);
        p.assign(n, -1);
        base.resize(n);
        for (int i = 0; i < n; ++i) base[i] = i;

        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // two outer vertices meet: contract the blossom
                    const int b = lowest_common_base(v, to);
                    blossom.assign(n, 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;  // augmenting path found
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    // Walks p[]/match[] links from the far free endpoint back to the root.
    std::vector<int> read_path(int finish) const {
        std::vector<int> path{finish};
        for (int v = finish; p[v] != -1;) {
            const int u = p[v];
            path.push_back(u);
            if (match[u] == -1) break;
            path.push_back(match[u]);
            v = match[u];
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

std::vector<int> match_array(const Graph& g, const Matching& m) {
    std::vector<int> match(g.vertex_count(), -1);
    for (const auto& [a, b] : m.edges) {
        match[a] = b;
        match[b] = a;
    }
    return match;
}

void guard_size(const Graph& g, int limit, bool force, const char* what) {
    if (!force && g.vertex_count() > limit)
        fail(errc::size_guard, std::string(what) + " on " + std::to_string(g.vertex_count()) +
                                   " vertices exceeds the limit of " + std::to_string(limit) +
                                   " (set force to override)");
}

}  // namespace

bool is_matching(const Graph& g, const EdgeSet& edges) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (const auto& [a, b] : edges) {
        if (!g.has_edge(a, b)) return false;
        if (covered[a] || covered[b]) return false;
        covered[a] = covered[b] = 1;
    }
    return true;
}

Matching make_matching(const Graph& g, EdgeSet edges) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    if (!is_matching(g, edges)) fail(errc::bad_argument, "edge set is not a matching");
    Matching m;
    m.edges = std::move(edges);
    m.covered.assign(g.vertex_count(), 0);
    for (const auto& [a, b] : m.edges) m.covered[a] = m.covered[b] = 1;
    return m;
}

std::optional<AugmentingPath> find_augmenting_path(const Graph& g, const Matching& m) {
    BlossomSearch search(g, match_array(g, m));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (search.match[v] != -1) continue;
        const int finish = search.run(v);
        if (finish != -1) return AugmentingPath{search.read_path(finish)};
    }
    return std::nullopt;
}

Matching augment(const Graph& g, const Matching& m, const AugmentingPath& path) {
    const auto& vs = path.vertices;
    if (vs.size() < 2 || vs.size() % 2 != 0)
        fail(errc::bad_argument, "augmenting path must alternate and have odd length");
    EdgeSet edges = m.edges;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Edge e = make_edge(vs[i], vs[i + 1]);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (i % 2 == 0) {
            if (it != edges.end() && *it == e)
                fail(errc::bad_argument, "path edge already matched");
            edges.insert(it, e);
        } else {
            if (it == edges.end() || *it != e)
                fail(errc::bad_argument, "path edge expected in the matching");
            edges.erase(it);
        }
    }
    return make_matching(g, std::move(edges));
}

Matching maximum_matching(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> match(n, -1);
    // greedy seed keeps the number of augmenting searches small
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        for (int w : g.neighbors(v)) {
            if (match[w] == -1) {
                match[v] = w;
                match[w] = v;
                break;
            }
        }
    }
    BlossomSearch search(g, match);
    for (int v = 0; v < n; ++v) {
        if (search.match[v] != -1) continue;
        const int finish = search.run(v);
        if (finish == -1) continue;
        // flip the path in place: finish, p[finish], match[p[finish]], ...
        int u = finish;
        while (u != -1) {
            const int pv = search.p[u];
            const int next = search.match[pv];
            search.match[u] = pv;
            search.match[pv] = u;
            u = next;
        }
    }
    EdgeSet edges;
    for (int v = 0; v < n; ++v)
        if (search.match[v] > v) edges.push_back({v, search.match[v]});
    return make_matching(g, std::move(edges));
}

int nu(const Graph& g) { return maximum_matching(g).size(); }

namespace {

// Shared state for the lexicographic maximum-matching walk. Edges are decided
// in index order (include if both ends free, else skip), which visits the
// matchings as sorted edge lists in lexicographic order.
struct MaxEnumState {
    const Graph& g;
    const MatchingVisitor& visit;
    int target;                 // = nu(g)
    int exact_bound_depth;
    std::vector<char> covered;
    EdgeSet chosen;
    std::int64_t count = 0;

    MaxEnumState(const Graph& graph, const MatchingVisitor& v, int t, int depth)
        : g(graph), visit(v), target(t), exact_bound_depth(depth),
          covered(graph.vertex_count(), 0) {}

    // Upper bound on how many edges of edges()[from..] can extend `chosen`.
    // Near the root an exact matching computation on the residual graph pays
    // for itself; deeper down a free-vertex count suffices.
    int residual_bound(int from) const {
        if (static_cast<int>(chosen.size()) < exact_bound_depth) {
            std::vector<Edge> avail;
            for (int i = from; i < g.edge_count(); ++i) {
                const auto& [a, b] = g.edges()[i];
                if (!covered[a] && !covered[b]) avail.push_back({a, b});
            }
            return nu(Graph(g.vertex_count(), avail));
        }
        int free_touched = 0;
        std::vector<char> touched(g.vertex_count(), 0);
        for (int i = from; i < g.edge_count(); ++i) {
            const auto& [a, b] = g.edges()[i];
            if (covered[a] || covered[b]) continue;
            if (!touched[a]) { touched[a] = 1; ++free_touched; }
            if (!touched[b]) { touched[b] = 1; ++free_touched; }
        }
        return free_touched / 2;
    }

    void walk(int from) {
        const int need = target - static_cast<int>(chosen.size());
        if (need == 0) {
            ++count;
            visit(chosen);
            return;
        }
        if (from >= g.edge_count() || residual_bound(from) < need) return;
        const auto& [a, b] = g.edges()[from];
        if (!covered[a] && !covered[b]) {
            covered[a] = covered[b] = 1;
            chosen.push_back({a, b});
            walk(from + 1);
            chosen.pop_back();
            covered[a] = covered[b] = 0;
        }
        walk(from + 1);
    }
};

}  // namespace

std::int64_t enumerate_maximum_matchings(const Graph& g, const MatchingVisitor& visit,
                                         const EnumOptions& options) {
    guard_size(g, options.limit, options.force, "maximum-matching enumeration");
    MaxEnumState state(g, visit, nu(g), options.exact_bound_depth);
    state.walk(0);
    return state.count;
}

namespace {

struct PerfectEnumState {
    const Graph& g;
    const MatchingVisitor& visit;
    std::vector<char> covered;
    EdgeSet chosen;  // built in increasing order of the smaller endpoint
    std::int64_t count = 0;

    PerfectEnumState(const Graph& graph, const MatchingVisitor& v)
        : g(graph), visit(v), covered(graph.vertex_count(), 0) {}

    void walk(int v) {
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            ++count;
            visit(chosen);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            chosen.push_back({v, w});  // v < w: w was uncovered, v is smallest such
            walk(v + 1);
            chosen.pop_back();
            covered[v] = covered[w] = 0;
        }
    }
};

}  // namespace

std::int64_t enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit, int limit,
                                         bool force) {
    guard_size(g, limit, force, "perfect-matching enumeration");
    if (g.vertex_count() % 2 != 0) return 0;
    PerfectEnumState state(g, visit);
    state.walk(0);
    return state.count;
}

}  // namespace matchgap
