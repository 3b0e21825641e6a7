#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "omstretch/flow.hpp"
#include "omstretch/serialization.hpp"

namespace omstretch {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitUnsupported = 3,
  kExitNumericalFailure = 4,
};

/// One flow experiment: a point configuration, a perturbation size and flow parameters.
struct ExperimentConfig {
  explicit ExperimentConfig(PointConfiguration config) : points(std::move(config)) {}

  std::uint64_t seed = 0;
  PointConfiguration points;
  double delta = 0.0;
  FlowParams flow;
  std::filesystem::path out = "flow-out";
  int repetitions = 1;

  /// Throws ArgumentError on delta < 0, repetitions < 1 or bad flow parameters.
  void validate() const;
};

/**
 * Reads an experiment document. "points" is either an inline point
 * configuration or a path relative to the document. Optional "n" and "d"
 * must agree with the points.
 */
ExperimentConfig experiment_from_json(const Json& j, const std::filesystem::path& base_dir);

struct RepetitionResult {
  int repetition = 0;
  std::string outcome;  ///< a FlowOutcome string, or "error"
  int steps = 0;
  double final_curv_max = 0.0;
  bool has_decay_fit = false;
  DecayFit decay;
  bool round_trip = false;
  std::string error;
};

/// Runs every repetition, writing rep-NNN/{trace.csv,sphere.json,recovered.json} under config.out.
std::vector<RepetitionResult> run_flow_experiment(const ExperimentConfig& config);

/// Entry point shared by the executable and the tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omstretch
