#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/transcript.hpp"

namespace ramsey {

using BuilderFactory = std::function<std::unique_ptr<BuilderOracle>()>;

enum class VerifyMode : std::uint8_t { kExhaustive, kRandomized };

struct VerifyReport {
  std::string builder;
  int k = 0;
  int n = 0;
  VerifyMode mode = VerifyMode::kExhaustive;
  int trials = 0;              // randomized only
  std::uint64_t seed = 0;      // randomized only
  int max_rounds_observed = 0;
  int bound = 0;
  std::uint64_t leaves_explored = 0;
  std::vector<std::string> invariant_failures;
  bool pass = false;
  std::optional<Transcript> witness;  // first failing game, when any

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

struct ExhaustiveOptions {
  int bound_guard = 30;  // refuse searches deeper than 2^guard leaves
  int jobs = 1;          // parallel top-level painter branches
};

// Walks every legal Painter reply sequence (branching only where both
// colors are legal), re-running a fresh Builder from each branch's reply
// prefix. Asserts BlueWin within the bound on every leaf.
VerifyReport exhaustive_verify(const BuilderFactory& factory,
                               const GameConfig& config, int bound,
                               const ExhaustiveOptions& options = {});

struct RandomizedOptions {
  int trials = 1000;           // games per painter spec
  std::uint64_t seed = 1;
  int jobs = 1;
  bool include_shipped = true;  // also run all-blue, red-greedy, heuristic
};

VerifyReport randomized_verify(const BuilderFactory& factory,
                               const GameConfig& config, int bound,
                               const RandomizedOptions& options = {});

enum class ReportFormat : std::uint8_t { kJson, kCsv };

std::string emit_report(const std::vector<VerifyReport>& reports,
                        ReportFormat format);

}  // namespace ramsey
