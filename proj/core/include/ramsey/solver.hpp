#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/board.hpp"

namespace ramsey {

struct SolverConfig {
  int k = 3;
  int n = 3;
  int round_budget = 0;    // search horizon; 0 = a generous default
  int vertex_budget = 0;   // 0 = 2 * round_budget
  bool use_memo = true;
};

struct SolveResult {
  int k = 0;
  int n = 0;
  std::optional<int> value;  // exact r~(P_k,P_n) when the search closed
  int lower_bound = 0;       // best proven lower bound (value when exact)
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::int64_t wall_time_ms = 0;

  bool exact() const { return value.has_value(); }
};

// Exact game value of the standard game R~(P_k,P_n) by full minimax over
// Builder moves and Painter colors, with isomorphism-class memoization and
// iterative deepening from the |E(P_k)|+|E(P_n)|-1 lower bound.
SolveResult solve(const SolverConfig& config);

// Builder move candidates up to board isomorphism: uncolored pairs among
// touched vertices, one fresh-endpoint move per touched vertex, and one
// fresh-fresh move, deduplicated by the canonical keys of both successor
// positions.
std::vector<std::pair<VertexId, VertexId>> builder_move_candidates(
    const ColoredGraph& g);

}  // namespace ramsey
