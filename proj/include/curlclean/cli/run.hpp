#pragma once
#include <memory>
#include <string>

#include "curlclean/cli/config.hpp"
#include "curlclean/mol/integrator.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

inline constexpr const char* kVersion = "0.1.0";

// Instantiates the system + initial data a config describes (shared by the
// run driver and the test suites).
std::unique_ptr<System> make_system(const RunConfig& cfg);
FieldSnapshot make_initial_data(const RunConfig& cfg, const System& sys);

struct RunOutcome {
  EvolveResult evolve;
  std::string output_dir;  // effective directory holding the artifacts
  double wall_seconds = 0;
};

// Full run: validate, build, evolve, write constraints.csv / snapshots /
// cuts / run.json into cfg.output_dir.  Configuration and I/O problems throw
// ConfigError / DataError; divergence is reported in the outcome (artifacts
// are still written and flagged in run.json).
RunOutcome run_simulation(const RunConfig& cfg);

}  // namespace curlclean
