#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "curlclean/core/grid.hpp"
#include "curlclean/core/params.hpp"
#include "curlclean/scenarios/scenarios.hpp"

namespace curlclean {

enum class Scenario {
  robust_stability,
  toy_curl_free,
  toy_pure_curl_error,
  induction_wave,
  rotating_masses,
  external_file,
};

// Full run description: every entry maps 1:1 to a `key = value` line of the
// config grammar (see parse_config / README for the key list).  Defaults here
// are the effective defaults echoed by --print-config.
struct RunConfig {
  Scenario scenario = Scenario::robust_stability;
  GridSpec grid;

  std::uint64_t seed = 42;
  double epsilon_pert = 0.0;
  bool glm = true;

  double cfl = 0.25;
  double fixed_dt = 0.0;  // > 0 forces the step size
  double t_end = 1.0;
  double sigma_ko = 0.05;
  int threads = 1;
  bool projection = false;

  int monitor_every = 10;
  int snapshot_every = 0;
  std::vector<std::string> snapshot_fields;
  std::vector<std::string> cut_axes;
  std::vector<std::string> cut_fields;
  std::string output_dir = "out";
  std::string initial_data;
  bool external_matter = false;  // external data carries the trailing tau

  CCZ4Params ccz4;
  ToyParams toy;
  GLMParams induction;
  RotatingMassesParams rot;

  double toy_amp = 0.1;
  double toy_sigma = 0.1;
  double toy_center[3] = {0.0, 0.0, 0.0};
  double toy_flow = 0.01;
  double wave_amplitude = 1.0;
  int wave_mode = 1;

  // metadata set by preset construction, emitted into run.json
  std::string preset;
  std::vector<std::string> deviations;
};

// Applies one `key = value` assignment; unknown keys or unparsable values
// throw ConfigError.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

// Parses the line-oriented config grammar (`key = value`, `#` comments) on
// top of the passed-in defaults.
void parse_config_text(RunConfig& cfg, const std::string& text,
                       const std::string& origin = "<config>");
void parse_config_file(RunConfig& cfg, const std::string& path);

// Cross-field validation; throws ConfigError.  Runs before any grid-sized
// allocation.
void validate_config(const RunConfig& cfg);

// Echoes the effective config as a parseable key = value listing (preset and
// deviations appear as comments).
void print_config(const RunConfig& cfg, std::ostream& os);

const Layout& layout_for_scenario(const RunConfig& cfg);

std::string to_string(Scenario s);

}  // namespace curlclean
