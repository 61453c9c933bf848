#pragma once

#include <string>

#include "ramsey/board.hpp"

namespace ramsey {

// Canonical form of a colored graph: equal strings exactly for isomorphic
// colored graphs (isolated vertices dropped). Exact refinement plus
// backtracking; intended for desk-scale graphs.
using CanonicalKey = std::string;

CanonicalKey canonicalize(const ColoredGraph& g,
                          std::size_t vertex_budget = 64);

}  // namespace ramsey
