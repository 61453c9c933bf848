#include "ramsey/game.hpp"

#include <algorithm>

namespace ramsey {

std::string_view to_string(GameStatus s) {
  switch (s) {
    case GameStatus::kInProgress:
      return "in_progress";
    case GameStatus::kBlueWin:
      return "blue_win";
    case GameStatus::kRedWin:
      return "red_win";
    case GameStatus::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

std::string_view to_string(GameVariant v) {
  return v == GameVariant::kStandard ? "standard" : "restricted_red";
}

GameState::GameState(GameConfig config)
    : config_(std::move(config)), board_(config_.initial_graph) {
  if (config_.n < 2) {
    throw Error("game requires n >= 2");
  }
  if (config_.k < 2) {
    throw Error("game requires k >= 2");
  }
  if (board_.has_blue_path(config_.n)) {
    status_ = GameStatus::kBlueWin;
  } else if (config_.variant == GameVariant::kStandard &&
             board_.longest_red_path() >= config_.k) {
    status_ = GameStatus::kRedWin;
  } else if (config_.round_budget <= 0) {
    status_ = GameStatus::kBudgetExceeded;
  }
}

ColorSet GameState::legal_colors(VertexId u, VertexId v) const {
  if (status_ != GameStatus::kInProgress) {
    throw GameOverError("legal_colors queried on a finished game");
  }
  if (board_.has_edge(u, v)) {
    throw IllegalMoveError(Offender::kBuilder, "edge already colored");
  }
  if (config_.variant == GameVariant::kStandard) {
    return {true, true};
  }
  const bool red_would_complete =
      board_.longest_red_path_through(u, v) >= config_.k;
  return {!red_would_complete, true};
}

bool GameState::is_forcing(VertexId u, VertexId v) const {
  if (board_.has_edge(u, v)) {
    throw IllegalMoveError(Offender::kBuilder, "edge already colored");
  }
  // Forcing is a restricted-red notion regardless of the variant in play.
  return board_.longest_red_path_through(u, v) >= config_.k;
}

void GameState::refresh_status(Color c) {
  if (c == Color::kBlue && board_.has_blue_path(config_.n)) {
    status_ = GameStatus::kBlueWin;
    return;
  }
  if (c == Color::kRed && config_.variant == GameVariant::kStandard &&
      board_.longest_red_path() >= config_.k) {
    status_ = GameStatus::kRedWin;
    return;
  }
  if (round() >= config_.round_budget) {
    status_ = GameStatus::kBudgetExceeded;
  }
}

void GameState::play_round(VertexId u, VertexId v, Color painter_color,
                           std::string note) {
  if (status_ != GameStatus::kInProgress) {
    throw GameOverError("play_round on a finished game");
  }
  if (u == v) {
    throw IllegalMoveError(Offender::kBuilder, "self-loop proposed");
  }
  if (u > v) std::swap(u, v);

  const auto existing = board_.edge_color(u, v);
  if (existing) {
    if (!config_.allow_reselect) {
      throw IllegalMoveError(Offender::kBuilder,
                             "edge reselected but reselection is disabled");
    }
    if (painter_color != *existing) {
      throw IllegalMoveError(Offender::kPainter,
                             "reselected edge must keep its color");
    }
    moves_.push_back(
        {round() + 1, u, v, *existing, /*forced=*/false, /*reselect=*/true,
         std::move(note)});
    if (round() >= config_.round_budget && status_ == GameStatus::kInProgress) {
      status_ = GameStatus::kBudgetExceeded;
    }
    return;
  }

  const ColorSet legal = legal_colors(u, v);
  if (!legal.contains(painter_color)) {
    throw IllegalMoveError(Offender::kPainter,
                           "painter answered an illegal color");
  }
  const bool forced = legal.blue_only();
  board_.add_edge(u, v, painter_color);
  moves_.push_back({round() + 1, u, v, painter_color, forced,
                    /*reselect=*/false, std::move(note)});
  refresh_status(painter_color);
}

void GameState::mark_budget_exceeded() {
  if (status_ == GameStatus::kInProgress) {
    status_ = GameStatus::kBudgetExceeded;
  }
}

GameState run_game(BuilderOracle& builder, PainterPolicy& painter,
                   const GameConfig& config) {
  GameState state(config);
  while (state.status() == GameStatus::kInProgress) {
    EdgeProposal proposal = builder.next_move(state);
    VertexId u = proposal.u;
    VertexId v = proposal.v;
    if (u > v) std::swap(u, v);

    const auto existing = state.board().edge_color(u, v);
    Color reply;
    if (existing) {
      // Reselection: Painter "colours" the edge with its existing color.
      reply = *existing;
    } else {
      reply = painter.choose_color(state, u, v, state.legal_colors(u, v));
    }
    state.play_round(u, v, reply, std::move(proposal.note));
    builder.on_painter_reply(state, u, v, reply);
  }
  return state;
}

}  // namespace ramsey
