#include "matchgap/graph.hpp"

#include <algorithm>
#include <queue>

namespace matchgap {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        fail(errc::index_out_of_range, std::string(what) + ": vertex " + std::to_string(v) +
                                           " outside 0.." + std::to_string(n - 1));
}

// Climbs both endpoints of a same-colour BFS edge to their meeting point;
// the two tree paths plus the closing edge form an odd cycle.
std::vector<int> odd_cycle_witness(const std::vector<int>& parent, const std::vector<int>& depth,
                                   int u, int v) {
    std::vector<int> from_u{u}, from_v{v};
    while (depth[u] > depth[v]) from_u.push_back(u = parent[u]);
    while (depth[v] > depth[u]) from_v.push_back(v = parent[v]);
    while (u != v) {
        from_u.push_back(u = parent[u]);
        from_v.push_back(v = parent[v]);
    }
    std::vector<int> cycle(from_u);
    for (int i = static_cast<int>(from_v.size()) - 2; i >= 0; --i) cycle.push_back(from_v[i]);
    return cycle;
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) fail(errc::bad_argument, "vertex count must be nonnegative");
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) fail(errc::self_loop, "loop at vertex " + std::to_string(a));
        check_vertex(a, n_, "edge endpoint");
        check_vertex(b, n_, "edge endpoint");
        edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, n_, "degree");
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

int Graph::edge_index(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return -1;
    const Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexDeletion delete_vertices(const Graph& g, const VertexSet& remove) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : remove) {
        check_vertex(v, n, "delete_vertices");
        gone[v] = 1;
    }
    VertexDeletion out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> kept;
    for (const auto& [a, b] : g.edges())
        if (!gone[a] && !gone[b]) kept.emplace_back(out.old_to_new[a], out.old_to_new[b]);
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), kept);
    return out;
}

Graph delete_edges(const Graph& g, const EdgeSet& remove) {
    std::vector<char> drop(g.edge_count(), 0);
    for (const auto& [a, b] : remove) {
        const int idx = g.edge_index(a, b);
        if (idx < 0)
            fail(errc::unknown_edge, "delete_edges: (" + std::to_string(a) + ", " +
                                         std::to_string(b) + ") is not an edge");
        drop[idx] = 1;
    }
    std::vector<Edge> kept;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!drop[i]) kept.push_back(g.edges()[i]);
    return Graph(g.vertex_count(), kept);
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    std::vector<std::pair<VertexSet, VertexSet>> sides;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        VertexSet side_a, side_b;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            (color[v] == 0 ? side_a : side_b).push_back(v);
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    BipartitionResult res;
                    res.odd_cycle = odd_cycle_witness(parent, depth, v, w);
                    return res;
                }
            }
        }
        std::sort(side_a.begin(), side_a.end());
        std::sort(side_b.begin(), side_b.end());
        sides.emplace_back(std::move(side_a), std::move(side_b));
    }
    BipartitionResult res;
    res.sides = std::move(sides);
    return res;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> comps;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [u, v] : g.edges()) {
        // common neighbours above v keep every triangle reported once, in
        // lexicographic order
        const auto& nu_ = g.neighbors(u);
        const auto& nv_ = g.neighbors(v);
        auto iu = std::upper_bound(nu_.begin(), nu_.end(), v);
        auto iv = std::upper_bound(nv_.begin(), nv_.end(), v);
        while (iu != nu_.end() && iv != nv_.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                out.push_back({u, v, *iu});
                ++iu;
                ++iv;
            }
        }
    }
    return out;
}

bool is_bridgeless(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const int w = nb[f.next++];
                if (w == f.parent) continue;  // simple graph: one parent edge to skip
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    const int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[f.v]);
                    if (low[f.v] > disc[parent]) return false;  // (parent, f.v) is a bridge
                }
            }
        }
    }
    return true;
}

}  // namespace matchgap
