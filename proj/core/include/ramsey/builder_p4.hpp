#pragma once

#include <memory>
#include <optional>

#include "ramsey/board.hpp"
#include "ramsey/game.hpp"
#include "ramsey/path_analysis.hpp"

namespace ramsey {

struct P4BuilderOptions {
  // Re-validate the good-graph decomposition against the raw board at every
  // checkpoint (default) instead of every fifth one.
  bool strict = true;
};

// The good-graph Builder for the restricted-red P_4 vs P_n game, n >= 10.
// Grows a very good graph five essential vertices at a time, adds the
// n mod 5 remainder, then assembles one blue path on n vertices. Wins
// within ceil(7n/5)-1 rounds against every legal Painter.
std::unique_ptr<BuilderOracle> make_builder_p4(int n,
                                               P4BuilderOptions options = {});

int p4_round_bound(int n);
GameConfig p4_game_config(int n);

// --- good-graph decomposition, exposed for checking ------------------------

struct GoodDecomposition {
  std::vector<VertexId> g0;                  // plain blue path, may be empty
  std::vector<VertexId> g1;                  // blue (1,1)-path, may be empty
  std::optional<ExtendedPathCert> g2;        // extended (2,0)-path
  std::optional<LimbCert> limb;
};

struct GoodCheckResult {
  bool good = false;
  bool very_good = false;
  std::string violation;  // first violated clause when not good
  int ess = 0;
  int edge_budget = 0;  // ceil(7 ess/5) - 1
};

// Evaluates conditions (A)-(G) of the good-graph definition against the raw
// board. `ignored` lists vertex sets of components deliberately excluded
// from the decomposition (used to check that deleting G0 or L keeps the
// graph good).
GoodCheckResult check_good(const ColoredGraph& board, const GoodDecomposition& d,
                           const std::vector<std::vector<VertexId>>& ignored = {});

int ess_of(const GoodDecomposition& d);

}  // namespace ramsey
