#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/board.hpp"

namespace ramsey {

enum class GameVariant : std::uint8_t {
  kStandard,       // Painter may create a red P_k and lose by it
  kRestrictedRed,  // Painter is never allowed to create a red P_k
};

enum class GameStatus : std::uint8_t {
  kInProgress,
  kBlueWin,
  kRedWin,
  kBudgetExceeded,
};

std::string_view to_string(GameStatus s);
std::string_view to_string(GameVariant v);

struct GameConfig {
  int k = 4;  // red target path order
  int n = 2;  // blue target path order
  GameVariant variant = GameVariant::kRestrictedRed;
  ColoredGraph initial_graph;  // the H of RR_H; may be empty
  bool allow_reselect = false;
  int round_budget = 1;
};

struct ColorSet {
  bool red = false;
  bool blue = false;

  bool contains(Color c) const { return c == Color::kRed ? red : blue; }
  int size() const { return (red ? 1 : 0) + (blue ? 1 : 0); }
  bool blue_only() const { return blue && !red; }
};

struct Move {
  int round = 0;  // 1-based
  VertexId u = 0;
  VertexId v = 0;  // u < v
  Color color = Color::kBlue;
  bool forced = false;
  bool reselect = false;
  std::string note;
};

// Full rule enforcement for one game of R~(P_k,P_n) or RR_H(P_k,P_n).
class GameState {
 public:
  explicit GameState(GameConfig config);

  const GameConfig& config() const { return config_; }
  const ColoredGraph& board() const { return board_; }
  ColoredGraph& board() { return board_; }
  int round() const { return static_cast<int>(moves_.size()); }
  GameStatus status() const { return status_; }
  const std::vector<Move>& moves() const { return moves_; }

  // Colors Painter may legally answer for an uncolored edge.
  ColorSet legal_colors(VertexId u, VertexId v) const;

  // True iff Painter's only legal answer on uv is blue under the
  // restricted-red rules, i.e. a red uv would complete a red P_k.
  bool is_forcing(VertexId u, VertexId v) const;

  // Plays one round. For a reselect round (edge already colored and
  // reselection allowed) painter_color must equal the existing color.
  // Throws IllegalMoveError naming the offender on any rule violation.
  void play_round(VertexId u, VertexId v, Color painter_color,
                  std::string note = {});

  // Marks the game as out of budget; used by drivers when the budget is
  // exhausted before a win.
  void mark_budget_exceeded();

 private:
  void refresh_status(Color c);

  GameConfig config_;
  ColoredGraph board_;
  std::vector<Move> moves_;
  GameStatus status_ = GameStatus::kInProgress;
};

struct EdgeProposal {
  VertexId u = 0;
  VertexId v = 0;
  std::string note;
};

// Builder strategies. next_move may allocate fresh vertices on the state's
// board; proposals must be legal (uncolored edge, or colored when the
// config allows reselection).
class BuilderOracle {
 public:
  virtual ~BuilderOracle() = default;
  virtual EdgeProposal next_move(GameState& state) = 0;
  virtual void on_painter_reply(const GameState& state, VertexId u, VertexId v,
                                Color c) = 0;
  virtual std::string_view name() const = 0;
};

class PainterPolicy {
 public:
  virtual ~PainterPolicy() = default;
  virtual Color choose_color(const GameState& state, VertexId u, VertexId v,
                             ColorSet legal) = 0;
  virtual std::string_view name() const = 0;
};

struct RunResult {
  GameState state;
  explicit RunResult(GameState s) : state(std::move(s)) {}
};

// Drives rounds until a terminal status. Propagates IllegalMoveError from
// either side; budget exhaustion is a status, not an error.
GameState run_game(BuilderOracle& builder, PainterPolicy& painter,
                   const GameConfig& config);

}  // namespace ramsey
