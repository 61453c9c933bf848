#include "ramsey/painters.hpp"

#include <istream>
#include <ostream>

namespace ramsey {

Color UniformRandomPainter::choose_color(const GameState&, VertexId, VertexId,
                                         ColorSet legal) {
  if (legal.size() == 1) {
    return legal.red ? Color::kRed : Color::kBlue;
  }
  return (rng_() & 1) ? Color::kBlue : Color::kRed;
}

double HeuristicAdversaryPainter::score(const GameState& state, VertexId u,
                                        VertexId v, Color c) const {
  // Hypothetical placement on a scratch copy of the board.
  ColoredGraph g = state.board();
  g.add_edge(u, v, c);
  double s = params_.path_weight * g.longest_blue_path();
  int mergeable = 0;
  for (const auto& comp : g.blue_components()) {
    if (comp.is_path) ++mergeable;
  }
  s += params_.merge_weight * mergeable;
  if (c == Color::kRed) {
    // Long red structure hands Builder forcing power.
    s += params_.red_weight *
         (static_cast<double>(g.longest_red_path_from(u)) / state.config().k);
  }
  return s;
}

Color HeuristicAdversaryPainter::choose_color(const GameState& state, VertexId u,
                                              VertexId v, ColorSet legal) {
  if (legal.size() == 1) {
    return legal.red ? Color::kRed : Color::kBlue;
  }
  const double red_score = score(state, u, v, Color::kRed);
  const double blue_score = score(state, u, v, Color::kBlue);
  return red_score <= blue_score ? Color::kRed : Color::kBlue;
}

Color ScriptedPainter::choose_color(const GameState& state, VertexId, VertexId,
                                    ColorSet legal) {
  const std::size_t idx = static_cast<std::size_t>(state.round());
  const char bit = idx < bits_.size() ? bits_[idx] : '1';
  if (bit == '0' && legal.red) return Color::kRed;
  return Color::kBlue;
}

Color InteractivePainter::choose_color(const GameState& state, VertexId u,
                                       VertexId v, ColorSet legal) {
  for (;;) {
    out_ << "round " << (state.round() + 1) << ": edge (" << u << "," << v
         << ") legal=[" << (legal.red ? "r," : "") << "b]> " << std::flush;
    std::string line;
    if (!std::getline(in_, line)) {
      throw Error("interactive painter: end of input stream");
    }
    if (line == "q") {
      throw Error("interactive painter: quit");
    }
    if (line == "r" && legal.red) return Color::kRed;
    if (line == "b") return Color::kBlue;
    out_ << "enter one of: " << (legal.red ? "r, " : "") << "b, q\n";
  }
}

std::unique_ptr<PainterPolicy> make_painter(const PainterSpec& spec) {
  if (spec.kind == "all-blue") return std::make_unique<AllBluePainter>();
  if (spec.kind == "red-greedy") return std::make_unique<RedGreedyPainter>();
  if (spec.kind == "random") return std::make_unique<UniformRandomPainter>(spec.seed);
  if (spec.kind == "heuristic")
    return std::make_unique<HeuristicAdversaryPainter>(spec.params);
  if (spec.kind == "script") return std::make_unique<ScriptedPainter>(spec.script);
  if (spec.kind == "interactive") {
    if (!spec.in || !spec.out) {
      throw Error("interactive painter needs input and output streams");
    }
    return std::make_unique<InteractivePainter>(*spec.in, *spec.out);
  }
  throw Error("unknown painter kind: " + spec.kind);
}

}  // namespace ramsey
