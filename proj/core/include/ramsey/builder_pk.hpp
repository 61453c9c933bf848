#pragma once

#include <memory>

#include "ramsey/game.hpp"

namespace ramsey {

struct PkBuilderOptions {
  // Re-validate the stage ledgers against the raw board after every round.
  bool strict = true;
};

// The three-stage Builder for the restricted-red P_k vs P_n game: builds
// ceil(n/3)+k disjoint blue paths of length 2, glues them into fewer than k
// blue paths, then into a single blue path on at least n vertices. Wins
// within 5T+7k-6 < 5n/3+12k rounds against every legal Painter. Requires
// k >= 5.
std::unique_ptr<BuilderOracle> make_builder_pk(int k, int n,
                                               PkBuilderOptions options = {});

// Round bound certified by the strategy.
int pk_round_bound(int k, int n);

// The game configuration this builder expects (restricted-red, reselection
// allowed, budget at the certified bound).
GameConfig pk_game_config(int k, int n);

// Internal stage bounds, exposed for verification: stage 1 uses at most
// 3T+2(k-1) rounds, stage 2 at most 2T-k, stage 3 at most 4t+2k with t < k.
struct PkStageBounds {
  int T = 0;
  int stage1 = 0;
  int stage2 = 0;
  int stage3 = 0;
};
PkStageBounds pk_stage_bounds(int k, int n);

// Per-stage round counts of a finished game, recovered from transcript
// annotations ("pk/stage1/...", "pk/stage2/...", "pk/stage3/...").
struct PkStageRounds {
  int stage1 = 0;
  int stage2 = 0;
  int stage3 = 0;
};
PkStageRounds pk_stage_rounds(const GameState& state);

}  // namespace ramsey
