#include "curlclean/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "curlclean/cli/writers.hpp"
#include "curlclean/constraints/monitors.hpp"
#include "curlclean/core/errors.hpp"
#include "curlclean/core/fo_indices.hpp"
#include "curlclean/scenarios/initial_data_io.hpp"
#include "curlclean/scenarios/scenarios.hpp"
#include "curlclean/systems/induction.hpp"
#include "curlclean/systems/toy.hpp"

namespace curlclean {

namespace {

double min_spacing(const GridSpec& g) {
  double h = std::min({g.hx(), g.hy(), g.hz()});
  return h;
}

CCZ4Params effective_ccz4(const RunConfig& cfg) {
  CCZ4Params z = cfg.ccz4;
  z.glm_enabled = cfg.glm;
  return z;
}

}  // namespace

std::unique_ptr<System> make_system(const RunConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::robust_stability:
      return std::make_unique<FOCCZ4System>(effective_ccz4(cfg));
    case Scenario::toy_curl_free:
    case Scenario::toy_pure_curl_error: {
      ToyParams t = cfg.toy;
      t.glm_enabled = cfg.glm;
      return std::make_unique<ToyHomogeneousSystem>(t);
    }
    case Scenario::induction_wave: {
      GLMParams p = cfg.induction;
      p.glm_enabled = cfg.glm;
      return std::make_unique<InductionSystem>(p);
    }
    case Scenario::rotating_masses:
      return std::make_unique<FOCCZ4System>(
          effective_ccz4(cfg), cfg.rot.rotation(min_spacing(cfg.grid)));
    case Scenario::external_file:
      if (cfg.external_matter)
        return std::make_unique<FOCCZ4System>(
            effective_ccz4(cfg), cfg.rot.rotation(min_spacing(cfg.grid)));
      return std::make_unique<FOCCZ4System>(effective_ccz4(cfg));
  }
  throw ConfigError("unhandled scenario");
}

FieldSnapshot make_initial_data(const RunConfig& cfg, const System& sys) {
  const Layout& lay = sys.layout();
  FieldSnapshot f;
  switch (cfg.scenario) {
    case Scenario::robust_stability:
      f = minkowski_init(cfg.grid, lay);
      break;
    case Scenario::toy_curl_free:
      f = toy_curl_free_init(cfg.grid, cfg.toy_flow);
      break;
    case Scenario::toy_pure_curl_error:
      f = toy_pure_curl_init(cfg.grid, cfg.toy_amp, cfg.toy_sigma,
                             cfg.toy_center);
      break;
    case Scenario::induction_wave:
      f = induction_wave_init(cfg.grid, cfg.wave_amplitude, cfg.wave_mode,
                              cfg.induction.c_light);
      break;
    case Scenario::rotating_masses:
      f = rotating_masses_init(cfg.grid, cfg.rot);
      break;
    case Scenario::external_file: {
      LoadReport rep;
      f = load_initial_data(cfg.initial_data, cfg.grid, lay, &rep);
      if (rep.max_det_drift > 1e-3)
        std::cerr << "warning: unit-determinant drift of the loaded conformal "
                     "metric is " << rep.max_det_drift << " (tolerance 1e-3)\n";
      break;
    }
  }

  if (cfg.epsilon_pert > 0) {
    // every variable gets noise except cleaning fields pinned to zero when
    // cleaning is off (their evolution is frozen, so noise would never leave)
    std::vector<std::uint8_t> include = sys.damp_mask();
    if (lay.kind == SystemKind::foccz4) include[fo::K0] = 1;
    perturb(f, cfg.seed, cfg.epsilon_pert, include);
  }
  return f;
}

RunOutcome run_simulation(const RunConfig& cfg) {
  validate_config(cfg);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec || !fs::is_directory(cfg.output_dir))
    throw DataError("cannot create output directory '" + cfg.output_dir + "'");

  const std::unique_ptr<System> sys = make_system(cfg);
  FieldSnapshot f = make_initial_data(cfg, *sys);

  ThreadPool pool(cfg.threads);
  SpatialOps ops(cfg.grid, pool);
  Monitors mon(*sys, cfg.grid, pool);
  ConstraintCsvWriter csv(cfg.output_dir + "/constraints.csv",
                          sys->residual_families());

  EvolveOptions opt;
  opt.time.cfl = cfg.cfl;
  opt.time.t_end = cfg.t_end;
  opt.time.fixed_dt = cfg.fixed_dt;
  opt.time.monitor_every = cfg.monitor_every;
  opt.sigma_ko = cfg.sigma_ko;
  opt.projection = cfg.projection;

  const auto snapshot_path = [&](long long step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "/snapshot_%06lld.vtk", step);
    return cfg.output_dir + buf;
  };
  std::function<void(const FieldSnapshot&, long long)> on_step;
  if (cfg.snapshot_every > 0) {
    write_vtk(snapshot_path(0), f, cfg.snapshot_fields);
    on_step = [&](const FieldSnapshot& s, long long step) {
      if (step % cfg.snapshot_every == 0)
        write_vtk(snapshot_path(step), s, cfg.snapshot_fields);
    };
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunOutcome out;
  out.evolve = evolve(
      *sys, f, ops, opt,
      [&](const FieldSnapshot& s) {
        ConstraintReport rep = mon.evaluate(s);
        csv.append(rep);
        return rep;
      },
      on_step);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  out.output_dir = cfg.output_dir;

  for (const auto& ax : cfg.cut_axes)
    write_cut_csv(cfg.output_dir + "/cuts_" + ax + ".csv", f, ax[0],
                  cfg.cut_fields);

  RunMetadata meta;
  meta.version = kVersion;
  meta.preset = cfg.preset;
  meta.scenario = to_string(cfg.scenario);
  meta.seed = cfg.seed;
  meta.threads = cfg.threads;
  meta.wall_seconds = out.wall_seconds;
  meta.t_final = out.evolve.t_final;
  meta.steps = out.evolve.steps;
  meta.diverged = out.evolve.diverged;
  meta.reason = out.evolve.reason;
  meta.deviations = cfg.deviations;
  write_run_json(cfg.output_dir + "/run.json", meta);

  return out;
}

}  // namespace curlclean
