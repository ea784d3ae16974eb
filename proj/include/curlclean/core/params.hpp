#pragma once

namespace curlclean {

enum class Slicing { harmonic, one_plus_log };

// One curl/divergence cleaning family: propagation speeds for the curl
// (a_c) and divergence (a_d) subsystems plus their damping rates.
struct CleaningFamily {
  double a_c = 1.5;
  double a_d = 1.5;
  double eps_c = 1.0;
  double eps_d = 1.0;
};

struct CCZ4Params {
  Slicing slicing = Slicing::harmonic;
  double s = 0.0;    // shift-evolution switch (0 frozen shift, 1 gamma driver)
  double f = 0.75;   // gamma-driver coupling
  double mu = 0.2;   // second-order ordering-constraint coupling in the B_k^i flux
  double eta = 0.0;  // shift-driver damping
  double e = 1.0;    // Z4 energy-cleaning speed multiplier
  double c = 1.0;    // Z4 switch: scales Theta feedback into gauge/extrinsic terms
  double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0;  // Z4 damping/ordering knobs
  bool glm_enabled = true;  // false: cleaning fields pinned to zero, curl terms dropped
  CleaningFamily fam_a, fam_b, fam_d, fam_p;

  // Slicing gauge function g(alpha) and h(alpha) = g + alpha dg/dalpha.
  double g_of_alpha(double alpha) const {
    return slicing == Slicing::harmonic ? 1.0 : 2.0 / alpha;
  }
  double h_of_alpha(double alpha) const {
    (void)alpha;
    return slicing == Slicing::harmonic ? 1.0 : 0.0;
  }
};

enum class ToySource { none, linear_relaxation };

struct ToyParams {
  double c0 = 1.0;  // thermal-impulse sound-speed coupling in the momentum flux
  double a_c = 1.5, a_d = 1.5, a_b = 1.5;
  double eps_c = 1.0, eps_d = 1.0, eps_b = 1.0;
  bool glm_enabled = true;
  ToySource source = ToySource::none;
  double tau_relax = 1.0;  // relaxation time when source == linear_relaxation
};

struct GLMParams {
  double c_light = 1.0;  // wave speed closing the induction pair
  double a_d = 1.5;
  double eps_d = 1.0;
  bool glm_enabled = true;
};

}  // namespace curlclean
