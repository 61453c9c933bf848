#include "ramsey/transcript.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ramsey {

using nlohmann::json;

namespace {

GameStatus status_from_string(const std::string& s) {
  if (s == "blue_win") return GameStatus::kBlueWin;
  if (s == "red_win") return GameStatus::kRedWin;
  if (s == "budget_exceeded") return GameStatus::kBudgetExceeded;
  if (s == "in_progress") return GameStatus::kInProgress;
  throw TranscriptFormatError("unknown outcome string: " + s);
}

Color color_from_string(const std::string& s) {
  if (s == "R") return Color::kRed;
  if (s == "B") return Color::kBlue;
  throw TranscriptFormatError("unknown color string: " + s);
}

}  // namespace

Transcript Transcript::from_game(const GameState& state) {
  Transcript t;
  const auto& cfg = state.config();
  t.k = cfg.k;
  t.n = cfg.n;
  t.variant = cfg.variant;
  t.allow_reselect = cfg.allow_reselect;
  t.round_budget = cfg.round_budget;
  t.initial_edges = cfg.initial_graph.edges_sorted();
  t.moves = state.moves();
  t.outcome = state.status();
  t.rounds = state.round();
  return t;
}

std::string Transcript::to_json() const {
  json j;
  j["config"] = {{"k", k},
                 {"n", n},
                 {"variant", std::string(to_string(variant))},
                 {"allow_reselect", allow_reselect},
                 {"round_budget", round_budget}};
  json init = json::array();
  for (const auto& e : initial_edges) {
    init.push_back({e.u, e.v, std::string(1, color_letter(e.color))});
  }
  j["initial_edges"] = std::move(init);
  json ms = json::array();
  for (const auto& m : moves) {
    ms.push_back({{"r", m.round},
                  {"u", m.u},
                  {"v", m.v},
                  {"c", std::string(1, color_letter(m.color))},
                  {"forced", m.forced},
                  {"reselect", m.reselect},
                  {"note", m.note}});
  }
  j["moves"] = std::move(ms);
  j["outcome"] = std::string(to_string(outcome));
  j["rounds"] = rounds;
  return j.dump(2) + "\n";
}

Transcript Transcript::parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw TranscriptFormatError(std::string("transcript is not valid JSON: ") +
                                e.what());
  }
  Transcript t;
  try {
    const auto& cfg = j.at("config");
    t.k = cfg.at("k").get<int>();
    t.n = cfg.at("n").get<int>();
    const auto variant = cfg.at("variant").get<std::string>();
    if (variant == "standard") {
      t.variant = GameVariant::kStandard;
    } else if (variant == "restricted_red") {
      t.variant = GameVariant::kRestrictedRed;
    } else {
      throw TranscriptFormatError("unknown variant: " + variant);
    }
    t.allow_reselect = cfg.at("allow_reselect").get<bool>();
    t.round_budget = cfg.at("round_budget").get<int>();
    for (const auto& e : j.at("initial_edges")) {
      t.initial_edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(),
                                 color_from_string(e.at(2).get<std::string>())});
    }
    for (const auto& m : j.at("moves")) {
      Move mv;
      mv.round = m.at("r").get<int>();
      mv.u = m.at("u").get<VertexId>();
      mv.v = m.at("v").get<VertexId>();
      mv.color = color_from_string(m.at("c").get<std::string>());
      mv.forced = m.at("forced").get<bool>();
      mv.reselect = m.at("reselect").get<bool>();
      mv.note = m.value("note", std::string{});
      t.moves.push_back(std::move(mv));
    }
    t.outcome = status_from_string(j.at("outcome").get<std::string>());
    t.rounds = j.at("rounds").get<int>();
  } catch (const json::exception& e) {
    throw TranscriptFormatError(std::string("transcript missing fields: ") +
                                e.what());
  }
  return t;
}

void Transcript::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open transcript file for writing: " + path);
  }
  out << to_json();
}

Transcript Transcript::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TranscriptFormatError("cannot open transcript file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

GameState replay(const Transcript& t, const ReplayOptions& options) {
  GameConfig cfg;
  cfg.k = t.k;
  cfg.n = t.n;
  cfg.variant = t.variant;
  cfg.allow_reselect = t.allow_reselect;
  cfg.round_budget = t.round_budget;
  for (const auto& e : t.initial_edges) {
    cfg.initial_graph.add_edge(e.u, e.v, e.color);
  }

  GameState state(std::move(cfg));
  for (const auto& m : t.moves) {
    if (state.status() != GameStatus::kInProgress) {
      throw ReplayMismatchError("move " + std::to_string(m.round) +
                                " recorded after the game ended");
    }
    if (m.round != state.round() + 1) {
      throw ReplayMismatchError("round indices are not consecutive at move " +
                                std::to_string(m.round));
    }
    if (options.validate && !m.reselect) {
      const bool forcing_now = state.is_forcing(m.u, m.v);
      if (forcing_now != m.forced) {
        throw ReplayMismatchError(
            "forced flag mismatch at round " + std::to_string(m.round) +
            ": recorded " + (m.forced ? "true" : "false"));
      }
    }
    try {
      state.play_round(m.u, m.v, m.color, m.note);
    } catch (const IllegalMoveError& e) {
      throw ReplayMismatchError("illegal move at round " +
                                std::to_string(m.round) + ": " + e.what());
    }
    if (options.annotate) {
      (*options.annotate) << "round " << m.round << ": (" << m.u << "," << m.v
                          << ") " << color_letter(m.color)
                          << (m.forced ? " forced" : "")
                          << (m.reselect ? " reselect" : "")
                          << (m.note.empty() ? "" : "  " + m.note) << "\n";
    }
  }
  if (options.validate) {
    if (state.status() != t.outcome) {
      throw ReplayMismatchError(std::string("outcome mismatch: recorded ") +
                                std::string(to_string(t.outcome)) +
                                ", replayed " +
                                std::string(to_string(state.status())));
    }
    if (state.round() != t.rounds) {
      throw ReplayMismatchError("round count mismatch: recorded " +
                                std::to_string(t.rounds) + ", replayed " +
                                std::to_string(state.round()));
    }
  }
  return state;
}

}  // namespace ramsey
