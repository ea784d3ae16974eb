#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curlclean/cli/compare.hpp"
#include "curlclean/cli/presets.hpp"
#include "curlclean/cli/run.hpp"
#include "curlclean/core/errors.hpp"

namespace {

// exit codes: 0 success, 1 configuration or I/O problem, 2 run diverged
constexpr int kOk = 0, kConfigError = 1, kDiverged = 2;

std::string preset_help() {
  std::string s = "Start from a named preset (";
  bool first = true;
  for (const auto& n : curlclean::preset_names()) {
    if (!first) s += ", ";
    s += n;
    first = false;
  }
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace curlclean;

  CLI::App app{"Cartesian-grid evolution of first-order hyperbolic systems "
               "with divergence- and curl-constraint cleaning"};
  app.require_subcommand(0, 1);

  std::string config_path, preset, glm, output_dir;
  int resolution = 0, threads = 0;
  double t_end = -1.0;
  long long seed = -1;
  bool print_only = false;

  app.add_option("--config", config_path, "Config file (key = value lines)");
  app.add_option("--preset", preset, preset_help());
  app.add_option("--glm", glm, "Override constraint cleaning: on or off")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--resolution", resolution,
                 "Override grid to resolution^3 cells");
  app.add_option("--t-end", t_end, "Override final time");
  app.add_option("--seed", seed, "Override perturbation seed");
  app.add_option("--output", output_dir, "Override output directory");
  app.add_option("--threads", threads, "Override worker thread count");
  app.add_flag("--print-config", print_only,
               "Echo the effective configuration and exit");

  CLI::App* cmp = app.add_subcommand(
      "compare", "Per-family constraint-norm ratios of two finished runs");
  std::string dir_a, dir_b;
  cmp->add_option("dir_a", dir_a, "Numerator run directory")->required();
  cmp->add_option("dir_b", dir_b, "Denominator run directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmp->parsed()) {
      print_compare(compare_runs(dir_a, dir_b), std::cout);
      return kOk;
    }

    RunConfig cfg;
    if (!preset.empty()) cfg = make_preset(preset);
    if (!config_path.empty()) parse_config_file(cfg, config_path);
    if (preset.empty() && config_path.empty() && !print_only) {
      std::cerr << "error: nothing to run; pass --preset and/or --config "
                   "(see --help)\n";
      return kConfigError;
    }

    if (!glm.empty()) cfg.glm = glm == "on";
    if (resolution > 0) cfg.grid.nx = cfg.grid.ny = cfg.grid.nz = resolution;
    if (t_end >= 0) cfg.t_end = t_end;
    if (seed >= 0) cfg.seed = std::uint64_t(seed);
    if (threads > 0) cfg.threads = threads;
    if (!output_dir.empty()) cfg.output_dir = output_dir;

    // relative output paths land under the root named by CURLCLEAN_OUT
    if (const char* root = std::getenv("CURLCLEAN_OUT");
        root && *root && !cfg.output_dir.empty() && cfg.output_dir[0] != '/')
      cfg.output_dir = std::string(root) + "/" + cfg.output_dir;

    if (print_only) {
      validate_config(cfg);
      print_config(cfg, std::cout);
      return kOk;
    }

    const RunOutcome out = run_simulation(cfg);
    if (out.evolve.diverged) {
      std::cerr << "run diverged: " << out.evolve.reason << "\n";
      std::cerr << "artifacts (flagged) in " << out.output_dir << "\n";
      return kDiverged;
    }
    std::cout << "done: t = " << out.evolve.t_final << " after "
              << out.evolve.steps << " steps (" << out.wall_seconds
              << " s); artifacts in " << out.output_dir << "\n";
    if (!out.evolve.reason.empty())
      std::cout << "note: " << out.evolve.reason << "\n";
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kConfigError;
  }
}
