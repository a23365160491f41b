#pragma once

#include <cstdint>

#include "matchgap/graph.hpp"

namespace matchgap {

// Both generators draw raw outputs from std::mt19937_64 seeded with the
// given seed and avoid the standard distributions, whose mappings differ
// between standard-library implementations; the same seed therefore yields
// the same graph on every platform.

/// Erdos-Renyi G(n, p): pairs (u, v), u < v, visited lexicographically; an
/// edge is kept iff the top 53 bits of the next output are below p * 2^53.
Graph random_gnp(int n, double p, std::uint64_t seed);

struct CubicOptions {
    int max_attempts = 20000;
};

/// Random connected bridgeless cubic graph via the pairing model: 3n stubs
/// are Fisher-Yates-shuffled (rejection-sampled bounded draws) and paired
/// consecutively; samples with loops, parallel edges, disconnection or a
/// bridge are rejected. Throws errc::give_up after max_attempts rejections.
Graph random_cubic_bridgeless(int n, std::uint64_t seed, const CubicOptions& options = {});

}  // namespace matchgap
