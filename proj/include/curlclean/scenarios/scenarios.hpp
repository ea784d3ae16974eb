#pragma once
#include <cstdint>
#include <vector>

#include "curlclean/core/field.hpp"
#include "curlclean/systems/foccz4.hpp"

namespace curlclean {

// Two rigidly rotating Gaussian energy lumps advected by a prescribed
// velocity field (anti-Cowling setup: the matter moves on rails and only
// sources the geometry).
struct RotatingMassesParams {
  double amp_l = 5e-4, amp_r = 5e-4;
  double sigma_l = 1.0, sigma_r = 1.0;
  double center_l[3] = {-2.0, 0.0, 0.0};
  double center_r[3] = {2.0, 0.0, 0.0};
  double omega[3] = {0.0, 0.0, 0.2};
  double r_cut = 5.0;
  double smooth_cells = 2.0;  // velocity-taper width in grid spacings

  double tau(double x, double y, double z) const;
  RigidRotation rotation(double h) const;
};

// Exact flat-space data: unit lapse and conformal factor (their logs stored
// as zero), identity conformal metric, every other component zero.
FieldSnapshot minkowski_init(const GridSpec& grid, const Layout& lay);

// Adds eps * uniform(-1,1) noise to every component with include[c] != 0
// (include empty = all).  The counter-based generator is keyed by
// (seed, component, i, j, k), so the result is traversal-order independent.
void perturb(FieldSnapshot& f, std::uint64_t seed, double eps,
             const std::vector<std::uint8_t>& include = {});

// Transport demo data with J an exact gradient (zero curl analytically):
// rho = 1 + 0.1 sin(2 pi x / Lx), a small solenoidal velocity field of
// amplitude flow_amp, and J = grad(cos(2 pi x / Lx) cos(2 pi y / Ly)).
FieldSnapshot toy_curl_free_init(const GridSpec& grid, double flow_amp);

// Quiescent background carrying a localized swirl with nonzero curl:
// J = amp * (-(y-yc), x-xc, 0) * exp(-r^2 / (2 sigma^2)), rho = 1, v = 0.
FieldSnapshot toy_pure_curl_init(const GridSpec& grid, double amp, double sigma,
                                 const double center[3]);

// Plane electromagnetic wave moving in +x:
//   B_y = amp sin(k (x - c t)),  E_z = -c amp sin(k (x - c t)),
// with k = 2 pi mode / Lx; an exact solution of the induction pair.
FieldSnapshot induction_wave_init(const GridSpec& grid, double amp, int mode,
                                  double c_light);
void induction_wave_exact(const GridSpec& grid, double t, double amp, int mode,
                          double c_light, FieldSnapshot& out);

// Flat space plus the double-Gaussian energy density in the trailing tau
// component (104-component layout).
FieldSnapshot rotating_masses_init(const GridSpec& grid,
                                   const RotatingMassesParams& par);

}  // namespace curlclean
