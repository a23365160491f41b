#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchgap/characterize.hpp"
#include "matchgap/edgelist.hpp"
#include "matchgap/gadget.hpp"
#include "matchgap/gap_oracle.hpp"
#include "matchgap/generators.hpp"
#include "matchgap/matching.hpp"
#include "matchgap/version.hpp"

using json = nlohmann::json;  // objects serialize with sorted keys
using namespace matchgap;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::bad_argument, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_argument, "cannot write '" + path + "'");
    out << text;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

// Vertices and edges in reports are 1-based, like the file format.
json to_json(const VertexSet& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(v + 1);
    return a;
}

json to_json(const EdgeSet& es) {
    json a = json::array();
    for (const auto& [u, v] : es) a.push_back({u + 1, v + 1});
    return a;
}

int env_limit(int fallback) {
    const char* raw = std::getenv("MATCHGAP_ORACLE_LIMIT");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0)
        fail(errc::bad_argument, std::string("MATCHGAP_ORACLE_LIMIT: not a count: '") + raw + "'");
    return static_cast<int>(value);
}

struct Emitter {
    std::string command;
    std::string digest;
    std::optional<std::uint64_t> seed;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void print(const json& payload) const {
        json report;
        report["command"] = command;
        report["input_digest"] = digest;
        report["payload"] = payload;
        if (seed) report["seed"] = *seed;
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        report["version"] = kVersion;
        std::cout << report.dump(2) << '\n';
    }
};

int exit_code(errc code) {
    switch (code) {
        case errc::size_guard: return 4;
        case errc::invariant_violation: return 1;
        default: return 3;
    }
}

int run_nu(const std::string& file) {
    const Graph g = parse_edgelist(read_file(file));
    std::cout << nu(g) << '\n';
    return 0;
}

int run_gap(const std::string& file, std::optional<int> limit, bool force) {
    const std::string text = read_file(file);
    Emitter out{"gap", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);

    EnumOptions options;
    options.limit = limit ? *limit : env_limit(options.limit);
    options.force = force;
    const GapProfile p = gap_profile(g, options);

    out.print({{"nu", p.nu},
               {"L", p.L},
               {"l", p.l},
               {"F_L", to_json(p.F_L)},
               {"F_l", to_json(p.F_l)},
               {"matchings_examined", p.matchings_examined}});
    return 0;
}

int run_check_2l(const std::string& file, bool cross_check) {
    const std::string text = read_file(file);
    Emitter out{"check-2l", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    const CharacterizationCertificate cert = check_L_eq_2l(g);

    json payload = {{"verdict", cert.verdict},
                    {"v1", to_json(cert.v1)},
                    {"x_side", to_json(cert.x_side)},
                    {"y_side", to_json(cert.y_side)}};
    json packing = json::array();
    for (const auto& [y1, x, y2] : cert.packing) packing.push_back({y1 + 1, x + 1, y2 + 1});
    payload["packing"] = packing;
    if (!cert.verdict) {
        payload["failed_condition"] = cert.failed_condition;
        payload["refutation"] = cert.refutation;
        json cycle = json::array();
        for (int v : cert.odd_cycle) cycle.push_back(v + 1);
        payload["odd_cycle"] = cycle;
    }

    bool agrees = true;
    if (cross_check) {
        EnumOptions options;
        options.limit = env_limit(options.limit);
        const GapProfile p = gap_profile(g, options);
        agrees = cert.verdict == (p.L == 2 * p.l);
        payload["cross_check"] = {{"L", p.L}, {"l", p.l}, {"agrees", agrees}};
        if (!agrees)
            std::cerr << "matchgap: certificate and oracle disagree on this input\n";
    }
    out.print(payload);
    return cert.verdict && agrees ? 0 : 1;
}

int run_verify(const std::string& file) {
    const std::string text = read_file(file);
    Emitter out{"verify", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    EnumOptions options;
    options.limit = env_limit(options.limit);

    json payload;
    bool all_ok = true;

    // L <= 2l over all ordered pairs of maximum matchings.
    try {
        const PairwiseBoundReport r = check_pairwise_bound(g, options);
        payload["pairwise"] = {{"ok", true},
                               {"L", r.L},
                               {"l", r.l},
                               {"matchings_examined", r.matchings_examined}};
    } catch (const Error& e) {
        if (e.code() != errc::invariant_violation) throw;
        payload["pairwise"] = {{"ok", false}, {"error", e.what()}};
        all_ok = false;
    }

    // 2L <= 3l when a perfect matching exists.
    try {
        const PerfectMatchingBoundReport r = check_perfect_matching_bound(g, options);
        payload["perfect_matching"] = {{"applicable", r.applicable}, {"ok", true}};
        if (r.applicable) {
            payload["perfect_matching"]["L"] = r.L;
            payload["perfect_matching"]["l"] = r.l;
        }
    } catch (const Error& e) {
        if (e.code() != errc::invariant_violation) throw;
        payload["perfect_matching"] = {{"ok", false}, {"error", e.what()}};
        all_ok = false;
    }

    // Each pendant-sibling removal lowers L and l by exactly one.
    {
        const PendantReductionTrace trace = pendant_reduction(g);
        json steps = json::array();
        bool ok = true;
        VertexSet gone;
        GapProfile before = gap_profile(g, options);
        for (const auto& [u, v, w] : trace.steps) {
            for (int x : {u, v, w}) gone.insert(std::lower_bound(gone.begin(), gone.end(), x), x);
            const GapProfile after = gap_profile(delete_vertices(g, gone).graph, options);
            ok = ok && after.L == before.L - 1 && after.l == before.l - 1;
            steps.push_back({u + 1, v + 1, w + 1});
            before = after;
        }
        payload["pendant"] = {{"k", trace.k()}, {"ok", ok}, {"steps", steps}};
        all_ok = all_ok && ok;
    }

    // Forced structure of extremal pairs, whenever the gap is exactly 2:1.
    try {
        const ExtremalStructureReport r = extremal_structure_check(g, options);
        payload["extremal"] = {{"applicable", true},
                               {"ok", true},
                               {"pairs_checked", r.pairs_checked},
                               {"h_matchings_checked", r.h_matchings_checked}};
    } catch (const Error& e) {
        if (e.code() == errc::not_applicable) {
            payload["extremal"] = {{"applicable", false}, {"ok", true}};
        } else if (e.code() == errc::invariant_violation) {
            payload["extremal"] = {{"applicable", true}, {"ok", false}, {"error", e.what()}};
            all_ok = false;
        } else {
            throw;
        }
    }

    payload["ok"] = all_ok;
    out.print(payload);
    return all_ok ? 0 : 1;
}

int run_inflate(const std::string& file, const std::string& output) {
    const std::string text = read_file(file);
    Emitter out{"inflate", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    const Inflation inf = inflate(g);
    write_file(output, write_edgelist(inf.inflated));
    out.print({{"base_vertices", inf.base.vertex_count()},
               {"base_edges", inf.base.edge_count()},
               {"vertices", inf.inflated.vertex_count()},
               {"edges", inf.inflated.edge_count()},
               {"output", output}});
    return 0;
}

int run_two_factors(const std::string& file) {
    const std::string text = read_file(file);
    Emitter out{"two-factors", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    CensusOptions options;
    options.limit = env_limit(options.limit);
    const TwoFactorStats stats = odd_cycle_stats(g, options);
    out.print({{"count", stats.count},
               {"w", stats.w},
               {"W", stats.W},
               {"witness_min", to_json(stats.witness_min)},
               {"witness_max", to_json(stats.witness_max)}});
    return 0;
}

int run_color3(const std::string& file) {
    const std::string text = read_file(file);
    Emitter out{"color3", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    const auto coloring = three_edge_colorable(g);
    json payload = {{"colorable", coloring.has_value()}};
    if (coloring) {
        json colored = json::array();
        for (std::size_t i = 0; i < coloring->color.size(); ++i) {
            const auto& [u, v] = g.edges()[i];
            colored.push_back({u + 1, v + 1, coloring->color[i]});
        }
        payload["colors"] = colored;
    }
    out.print(payload);
    return coloring ? 0 : 1;
}

int run_reduce_check(const std::string& file) {
    const std::string text = read_file(file);
    Emitter out{"reduce-check", fnv1a_hex(text)};
    const Graph g = parse_edgelist(text);
    CensusOptions options;
    options.limit = env_limit(options.limit);
    const ReductionReport r = reduction_check(g, options);
    out.print({{"base_colorable", r.base_colorable},
               {"inflated_colorable", r.inflated_colorable},
               {"ratio_holds", r.ratio_holds},
               {"consistent", r.consistent},
               {"L", r.L},
               {"l", r.l},
               {"w", r.w},
               {"W", r.W},
               {"two_factor_count", r.two_factor_count}});
    return r.consistent ? 0 : 1;
}

int run_gen(const std::string& kind, int n, const std::string& p_text, std::uint64_t seed,
            const std::string& output) {
    Graph g;
    json payload = {{"kind", kind}, {"n", n}, {"output", output}};
    if (kind == "gnp") {
        char* end = nullptr;
        const double p = std::strtod(p_text.c_str(), &end);
        if (p_text.empty() || end == nullptr || *end != '\0')
            fail(errc::bad_argument, "--p: not a probability: '" + p_text + "'");
        g = random_gnp(n, p, seed);
        payload["p"] = p_text;  // verbatim: reports carry no floating-point fields
    } else {
        g = random_cubic_bridgeless(n, seed);
    }
    const std::string text = write_edgelist(g);
    write_file(output, text);
    Emitter out{"gen", fnv1a_hex(text), seed};
    payload["vertices"] = g.vertex_count();
    payload["edges"] = g.edge_count();
    out.print(payload);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching-gap analysis of finite simple graphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, output, kind, p_text;
    std::optional<int> limit;
    bool force = false, cross_check = false;
    int n = 0;
    std::uint64_t seed = 0;

    auto* nu_cmd = app.add_subcommand("nu", "print the matching number");
    nu_cmd->add_option("file", file, "edge-list input")->required();
    nu_cmd->callback([&] { action = [&] { return run_nu(file); }; });

    auto* gap_cmd = app.add_subcommand("gap", "L and l with witness matchings");
    gap_cmd->add_option("file", file)->required();
    gap_cmd->add_option("--limit", limit, "vertex-count guard for the enumeration");
    gap_cmd->add_flag("--force", force, "lift the guard");
    gap_cmd->callback([&] { action = [&] { return run_gap(file, limit, force); }; });

    auto* check_cmd = app.add_subcommand("check-2l", "polynomial certificate for L = 2l");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_flag("--cross-check", cross_check, "also run the enumeration oracle");
    check_cmd->callback([&] { action = [&] { return run_check_2l(file, cross_check); }; });

    auto* verify_cmd = app.add_subcommand("verify", "ratio bounds, pendant recurrence, extremal structure");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->callback([&] { action = [&] { return run_verify(file); }; });

    auto* inflate_cmd = app.add_subcommand("inflate", "triangle inflation of a cubic graph");
    inflate_cmd->add_option("file", file)->required();
    inflate_cmd->add_option("-o,--output", output, "where to write the inflated graph")->required();
    inflate_cmd->callback([&] { action = [&] { return run_inflate(file, output); }; });

    auto* factors_cmd = app.add_subcommand("two-factors", "odd-cycle census over all 2-factors");
    factors_cmd->add_option("file", file)->required();
    factors_cmd->callback([&] { action = [&] { return run_two_factors(file); }; });

    auto* color_cmd = app.add_subcommand("color3", "3-edge-colour a cubic graph");
    color_cmd->add_option("file", file)->required();
    color_cmd->callback([&] { action = [&] { return run_color3(file); }; });

    auto* reduce_cmd = app.add_subcommand("reduce-check", "colourability vs gap ratio on the inflation");
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->callback([&] { action = [&] { return run_reduce_check(file); }; });

    auto* gen_cmd = app.add_subcommand("gen", "write a pseudorandom graph");
    gen_cmd->add_option("kind", kind, "gnp or cubic")
        ->required()
        ->check(CLI::IsMember({"gnp", "cubic"}));
    gen_cmd->add_option("--n", n, "vertex count")->required();
    gen_cmd->add_option("--p", p_text, "edge probability (gnp)");
    gen_cmd->add_option("--seed", seed, "64-bit seed")->required();
    gen_cmd->add_option("-o,--output", output, "output file")->required();
    gen_cmd->callback([&] {
        action = [&] {
            if (kind == "gnp" && p_text.empty()) fail(errc::bad_argument, "gnp needs --p");
            return run_gen(kind, n, p_text, seed, output);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly, usage errors as 2
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "matchgap: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "matchgap: " << e.what() << '\n';
        return 3;
    }
}
