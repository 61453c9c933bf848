#pragma once

#include <iosfwd>
#include <memory>
#include <random>
#include <string>

#include "ramsey/game.hpp"

namespace ramsey {

// Always answers blue.
class AllBluePainter : public PainterPolicy {
 public:
  Color choose_color(const GameState&, VertexId, VertexId, ColorSet) override {
    return Color::kBlue;
  }
  std::string_view name() const override { return "all-blue"; }
};

// Red whenever red is legal.
class RedGreedyPainter : public PainterPolicy {
 public:
  Color choose_color(const GameState&, VertexId, VertexId,
                     ColorSet legal) override {
    return legal.red ? Color::kRed : Color::kBlue;
  }
  std::string_view name() const override { return "red-greedy"; }
};

// Uniform choice among the legal colors; fully determined by the seed.
class UniformRandomPainter : public PainterPolicy {
 public:
  explicit UniformRandomPainter(std::uint64_t seed) : rng_(seed) {}
  Color choose_color(const GameState&, VertexId, VertexId,
                     ColorSet legal) override;
  std::string_view name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

struct HeuristicParams {
  double path_weight = 1.0;   // longest blue path after the move
  double merge_weight = 1.0;  // blue path components available for merging
  double red_weight = 1.0;    // proximity of the new red structure to P_k
};

// Scores both legal colors and answers the one that minimizes Builder's
// blue progress; ties go to red.
class HeuristicAdversaryPainter : public PainterPolicy {
 public:
  explicit HeuristicAdversaryPainter(HeuristicParams params = {})
      : params_(params) {}
  Color choose_color(const GameState& state, VertexId u, VertexId v,
                     ColorSet legal) override;
  std::string_view name() const override { return "heuristic"; }

 private:
  double score(const GameState& state, VertexId u, VertexId v, Color c) const;
  HeuristicParams params_;
};

// Bit i of the script is the color of round i: '0' plays red when legal
// (blue otherwise), '1' plays blue. Rounds beyond the script play blue.
class ScriptedPainter : public PainterPolicy {
 public:
  explicit ScriptedPainter(std::string bits) : bits_(std::move(bits)) {}
  Color choose_color(const GameState& state, VertexId, VertexId,
                     ColorSet legal) override;
  std::string_view name() const override { return "script"; }

 private:
  std::string bits_;
};

// Terminal painter: prints the proposed edge and legal colors, reads
// "r"/"b" ("q" aborts). End of stream aborts the game with a diagnostic.
class InteractivePainter : public PainterPolicy {
 public:
  InteractivePainter(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  Color choose_color(const GameState& state, VertexId u, VertexId v,
                     ColorSet legal) override;
  std::string_view name() const override { return "interactive"; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

struct PainterSpec {
  std::string kind;  // all-blue | red-greedy | random | heuristic | script | interactive
  std::uint64_t seed = 0;
  std::string script;
  HeuristicParams params{};
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

std::unique_ptr<PainterPolicy> make_painter(const PainterSpec& spec);

}  // namespace ramsey
