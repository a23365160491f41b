#include "matchgap/edgelist.hpp"

#include <sstream>

namespace matchgap {

namespace {

[[noreturn]] void syntax(int line, const std::string& why) {
    fail(errc::syntax, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, declared_m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) syntax(line_no, "second problem line");
            std::string kind;
            if (!(fields >> kind >> n >> declared_m) || kind != "edge" || n < 0 || declared_m < 0)
                syntax(line_no, "expected 'p edge <n> <m>'");
            std::string rest;
            if (fields >> rest) syntax(line_no, "trailing tokens after the problem line");
            continue;
        }
        if (tag == "e") {
            if (n == -1) syntax(line_no, "edge before the problem line");
            int u = 0, v = 0;
            if (!(fields >> u >> v)) syntax(line_no, "expected 'e <u> <v>'");
            std::string rest;
            if (fields >> rest) syntax(line_no, "trailing tokens after an edge");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(errc::index_out_of_range,
                     "line " + std::to_string(line_no) + ": endpoint outside 1.." + std::to_string(n));
            if (u == v)
                fail(errc::self_loop, "line " + std::to_string(line_no) + ": loop at " + std::to_string(u));
            const Edge e = make_edge(u - 1, v - 1);
            for (const Edge& prior : edges)
                if (prior == e)
                    fail(errc::syntax, "line " + std::to_string(line_no) + ": duplicate edge " +
                                           std::to_string(u) + " " + std::to_string(v));
            edges.push_back(e);
            continue;
        }
        syntax(line_no, "unknown record '" + tag + "'");
    }
    if (n == -1) fail(errc::syntax, "missing problem line");
    if (static_cast<int>(edges.size()) != declared_m)
        fail(errc::header_mismatch, "header declares " + std::to_string(declared_m) +
                                        " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string write_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace matchgap
