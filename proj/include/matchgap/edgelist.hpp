#pragma once

#include <string>

#include "matchgap/graph.hpp"

namespace matchgap {

/// DIMACS-style edge list: 'c' comment lines, one 'p edge <n> <m>' header,
/// then m lines 'e <u> <v>' with 1-based endpoints. Duplicate edges, loops,
/// out-of-range endpoints and count mismatches are rejected.
Graph parse_edgelist(const std::string& text);

/// Canonical form: header then edges sorted ascending, 1-based.
std::string write_edgelist(const Graph& g);

}  // namespace matchgap
