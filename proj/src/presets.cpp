#include "curlclean/cli/presets.hpp"

#include "curlclean/core/errors.hpp"

namespace curlclean {

namespace {

void all_families(CCZ4Params& z, double a_c, double a_d, double eps_c,
                  double eps_d) {
  for (CleaningFamily* f : {&z.fam_a, &z.fam_b, &z.fam_d, &z.fam_p}) {
    f->a_c = a_c;
    f->a_d = a_d;
    f->eps_c = eps_c;
    f->eps_d = eps_d;
  }
}

void cube(GridSpec& g, int n, double half) {
  g.nx = g.ny = g.nz = n;
  g.xmin = g.ymin = g.zmin = -half;
  g.xmax = g.ymax = g.zmax = half;
}

RunConfig robust_stability_coarse() {
  RunConfig c;
  c.preset = "robust-stability-coarse";
  c.scenario = Scenario::robust_stability;
  cube(c.grid, 20, 0.5);
  c.seed = 42;
  c.epsilon_pert = 1e-6;
  c.t_end = 100.0;
  c.cfl = 0.4;
  c.sigma_ko = 0.05;
  c.monitor_every = 100;
  c.ccz4.slicing = Slicing::harmonic;
  c.ccz4.s = 0.0;
  c.ccz4.e = 2.0;
  c.ccz4.c = 0.0;
  c.ccz4.kappa1 = c.ccz4.kappa2 = c.ccz4.kappa3 = 0.0;
  all_families(c.ccz4, 1.5, 2.0, 1.0, 1.0);
  c.deviations = {
      "desk-scale grid 20^3",
      "desk-scale t_end 100",
      "cleaning speeds applied uniformly to all four constraint families",
  };
  return c;
}

RunConfig rotating_masses_desk(bool glm_on) {
  RunConfig c;
  c.preset = glm_on ? "rotating-masses-desk" : "rotating-masses-desk-off";
  c.scenario = Scenario::rotating_masses;
  c.grid.nx = c.grid.ny = 80;
  c.grid.nz = 8;
  c.grid.xmin = c.grid.ymin = -40.0;
  c.grid.xmax = c.grid.ymax = 40.0;
  c.grid.zmin = -4.0;
  c.grid.zmax = 4.0;
  c.t_end = 50.0;
  c.cfl = 0.4;
  c.sigma_ko = 0.05;
  c.monitor_every = 5;
  c.glm = glm_on;
  c.ccz4.slicing = Slicing::harmonic;
  c.ccz4.s = 0.0;
  c.ccz4.e = glm_on ? 2.0 : 1.0;
  c.ccz4.c = glm_on ? 0.0 : 1.0;
  all_families(c.ccz4, 1.5, 1.5, 1.0, 1.0);
  c.rot = RotatingMassesParams{};
  c.deviations = {
      "desk-scale grid 80x80x8",
      "desk-scale t_end 50",
      "periodic box approximates an open domain (waves re-enter)",
  };
  return c;
}

RunConfig toy_curl_free() {
  RunConfig c;
  c.preset = "toy-curl-free";
  c.scenario = Scenario::toy_curl_free;
  cube(c.grid, 32, 0.5);
  c.t_end = 1.0;
  c.cfl = 0.4;
  c.monitor_every = 10;
  return c;
}

RunConfig toy_pure_curl_error() {
  RunConfig c;
  c.preset = "toy-pure-curl-error";
  c.scenario = Scenario::toy_pure_curl_error;
  cube(c.grid, 32, 0.5);
  c.t_end = 10.0;
  c.cfl = 0.4;
  c.monitor_every = 10;
  // quiescent carrier: no sound coupling, so with cleaning off the swirl is
  // frozen and only artificial dissipation acts on it
  c.toy.c0 = 0.0;
  c.toy.a_c = 1.5;
  c.toy.a_d = 1.5;
  c.toy.eps_c = 1.0;
  c.toy.eps_d = 1.0;
  c.toy_amp = 0.1;
  c.toy_sigma = 0.1;
  return c;
}

RunConfig induction_wave() {
  RunConfig c;
  c.preset = "induction-wave";
  c.scenario = Scenario::induction_wave;
  cube(c.grid, 32, 0.5);
  c.t_end = 1.0;  // one crossing of the unit box at c_light = 1
  c.cfl = 0.4;
  c.monitor_every = 10;
  c.wave_amplitude = 1.0;
  c.wave_mode = 1;
  return c;
}

RunConfig tov_external() {
  RunConfig c;
  c.preset = "tov-external";
  c.scenario = Scenario::external_file;
  c.external_matter = true;
  cube(c.grid, 32, 8.0);
  c.t_end = 10.0;
  c.cfl = 0.4;
  c.monitor_every = 10;
  c.ccz4.e = 1.2;
  c.ccz4.kappa1 = 0.03;
  all_families(c.ccz4, 0.1, 0.1, 5.0, 5.0);
  for (int i = 0; i < 3; ++i) c.rot.omega[i] = 0.0;  // static matter
  c.deviations = {
      "initial_data must point at an externally generated equilibrium star",
  };
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {
      "robust-stability-coarse", "rotating-masses-desk",
      "rotating-masses-desk-off", "toy-curl-free",
      "toy-pure-curl-error",     "induction-wave",
      "tov-external",
  };
}

RunConfig make_preset(const std::string& name) {
  if (name == "robust-stability-coarse") return robust_stability_coarse();
  if (name == "rotating-masses-desk") return rotating_masses_desk(true);
  if (name == "rotating-masses-desk-off") return rotating_masses_desk(false);
  if (name == "toy-curl-free") return toy_curl_free();
  if (name == "toy-pure-curl-error") return toy_pure_curl_error();
  if (name == "induction-wave") return induction_wave();
  if (name == "tov-external") return tov_external();
  std::string known;
  for (const auto& n : preset_names()) known += " " + n;
  throw ConfigError("unknown preset '" + name + "'; available:" + known);
}

}  // namespace curlclean
