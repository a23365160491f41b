#include "matchgap/generators.hpp"

#include <algorithm>
#include <random>

namespace matchgap {

namespace {

// Unbiased draw from [0, k) by rejection on the raw 64-bit stream.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    const std::uint64_t q = UINT64_MAX / k;
    const std::uint64_t limit = q * k;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % k;
}

}  // namespace

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) fail(errc::bad_argument, "vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::bad_argument, "probability must lie in [0, 1]");
    // compare the top 53 bits of each draw against p * 2^53: exact for the
    // endpoints and identical on every platform
    const std::uint64_t threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_cubic_bridgeless(int n, std::uint64_t seed, const CubicOptions& options) {
    if (n < 4 || n % 2 != 0)
        fail(errc::bad_argument, "a cubic graph needs an even vertex count of at least 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        // pairing model: shuffle the 3n stubs, pair them off consecutively
        std::vector<int> stubs(3 * n);
        for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
        for (int i = 3 * n - 1; i > 0; --i)
            std::swap(stubs[i], stubs[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);

        std::vector<Edge> edges;
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            if (stubs[i] == stubs[i + 1]) simple = false;  // loop
            else edges.push_back(make_edge(stubs[i], stubs[i + 1]));
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;  // doubled

        const Graph g(n, edges);
        if (connected_components(g).size() != 1) continue;
        if (!is_bridgeless(g)) continue;
        return g;
    }
    fail(errc::give_up, "no simple connected bridgeless cubic sample within " +
                            std::to_string(options.max_attempts) + " attempts");
}

}  // namespace matchgap
