#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/game.hpp"

namespace ramsey {

// Ordered record of one play-through. Replaying moves from initial_edges
// reproduces the final board exactly.
struct Transcript {
  int k = 0;
  int n = 0;
  GameVariant variant = GameVariant::kRestrictedRed;
  bool allow_reselect = false;
  int round_budget = 0;
  std::vector<ColoredEdge> initial_edges;  // u < v, sorted
  std::vector<Move> moves;
  GameStatus outcome = GameStatus::kInProgress;
  int rounds = 0;

  static Transcript from_game(const GameState& state);

  std::string to_json() const;  // newline-terminated UTF-8
  static Transcript parse_json(const std::string& text);

  void save(const std::string& path) const;
  static Transcript load(const std::string& path);
};

struct ReplayOptions {
  // Re-check that recorded forced flags match is_forcing at the pre-move
  // state and that the recorded outcome/rounds match the recomputation.
  bool validate = true;
  std::ostream* annotate = nullptr;  // per-round annotation sink
};

// Replays a transcript through the rule engine. Throws ReplayMismatchError
// on any divergence (illegal move, forced-flag disagreement, or recorded
// outcome not matching the recomputed one).
GameState replay(const Transcript& t, const ReplayOptions& options = {});

}  // namespace ramsey
