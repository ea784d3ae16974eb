#include "curlclean/scenarios/scenarios.hpp"

#include <cmath>

#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/noise.hpp"
#include "curlclean/core/toy_indices.hpp"

namespace curlclean {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double RotatingMassesParams::tau(double x, double y, double z) const {
  const double dl[3] = {x - center_l[0], y - center_l[1], z - center_l[2]};
  const double dr[3] = {x - center_r[0], y - center_r[1], z - center_r[2]};
  const double rl2 = dl[0] * dl[0] + dl[1] * dl[1] + dl[2] * dl[2];
  const double rr2 = dr[0] * dr[0] + dr[1] * dr[1] + dr[2] * dr[2];
  return amp_l * std::exp(-rl2 / (2.0 * sigma_l * sigma_l)) +
         amp_r * std::exp(-rr2 / (2.0 * sigma_r * sigma_r));
}

RigidRotation RotatingMassesParams::rotation(double h) const {
  RigidRotation rot;
  for (int i = 0; i < 3; ++i) rot.omega[i] = omega[i];
  rot.r_cut = r_cut;
  rot.smooth = smooth_cells * h;
  return rot;
}

FieldSnapshot minkowski_init(const GridSpec& grid, const Layout& lay) {
  FieldSnapshot f(grid, lay);
  // everything is zero-initialized; the identity conformal metric is the
  // only nontrivial entry (ln alpha = ln phi = 0 encode alpha = phi = 1)
  const std::size_t n = grid.n();
  for (int s : {0, 3, 5}) {
    double* p = f.comp(fo::GT + s);
    for (std::size_t q = 0; q < n; ++q) p[q] = 1.0;
  }
  return f;
}

void perturb(FieldSnapshot& f, std::uint64_t seed, double eps,
             const std::vector<std::uint8_t>& include) {
  if (eps == 0.0) return;
  const int nc = f.layout->count;
  for (int c = 0; c < nc; ++c) {
    if (!include.empty() && !include[c]) continue;
    double* p = f.comp(c);
    std::size_t q = 0;
    for (int k = 0; k < f.grid.nz; ++k)
      for (int j = 0; j < f.grid.ny; ++j)
        for (int i = 0; i < f.grid.nx; ++i, ++q)
          p[q] += eps * unit_noise(seed, c, i, j, k);
  }
}

FieldSnapshot toy_curl_free_init(const GridSpec& grid, double flow_amp) {
  FieldSnapshot f(grid, layout_for(SystemKind::toy_homogeneous));
  const double kx = kTwoPi / (grid.xmax - grid.xmin);
  const double ky = kTwoPi / (grid.ymax - grid.ymin);
  const double kz = kTwoPi / (grid.zmax - grid.zmin);
  std::size_t q = 0;
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i, ++q) {
        const double x = grid.x(i), y = grid.y(j), z = grid.z(k);
        const double rho = 1.0 + 0.1 * std::sin(kx * x);
        // component-shifted sines: div v = 0 termwise
        const double v[3] = {flow_amp * std::sin(ky * y),
                             flow_amp * std::sin(kz * z),
                             flow_amp * std::sin(kx * x)};
        f.comp(toy::RHO)[q] = rho;
        for (int m = 0; m < 3; ++m) f.comp(toy::MOM + m)[q] = rho * v[m];
        // J = grad(cos(kx x) cos(ky y)): an exact gradient, curl-free
        f.comp(toy::J + 0)[q] = -kx * std::sin(kx * x) * std::cos(ky * y);
        f.comp(toy::J + 1)[q] = -ky * std::cos(kx * x) * std::sin(ky * y);
      }
  return f;
}

FieldSnapshot toy_pure_curl_init(const GridSpec& grid, double amp, double sigma,
                                 const double center[3]) {
  FieldSnapshot f(grid, layout_for(SystemKind::toy_homogeneous));
  const double s2 = 2.0 * sigma * sigma;
  std::size_t q = 0;
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i, ++q) {
        const double dx = grid.x(i) - center[0];
        const double dy = grid.y(j) - center[1];
        const double dz = grid.z(k) - center[2];
        const double g = amp * std::exp(-(dx * dx + dy * dy + dz * dz) / s2);
        f.comp(toy::RHO)[q] = 1.0;
        f.comp(toy::J + 0)[q] = -dy * g;
        f.comp(toy::J + 1)[q] = dx * g;
      }
  return f;
}

void induction_wave_exact(const GridSpec& grid, double t, double amp, int mode,
                          double c_light, FieldSnapshot& out) {
  const double kw = kTwoPi * mode / (grid.xmax - grid.xmin);
  std::size_t q = 0;
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i, ++q) {
        const double s = std::sin(kw * (grid.x(i) - c_light * t));
        out.comp(ind::B + 1)[q] = amp * s;
        out.comp(ind::E + 2)[q] = -c_light * amp * s;
      }
  out.time = t;
}

FieldSnapshot induction_wave_init(const GridSpec& grid, double amp, int mode,
                                  double c_light) {
  FieldSnapshot f(grid, layout_for(SystemKind::induction_glm));
  induction_wave_exact(grid, 0.0, amp, mode, c_light, f);
  return f;
}

FieldSnapshot rotating_masses_init(const GridSpec& grid,
                                   const RotatingMassesParams& par) {
  FieldSnapshot f = minkowski_init(grid, foccz4_tau_layout());
  double* p = f.comp(fo::TAU);
  std::size_t q = 0;
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i, ++q)
        p[q] = par.tau(grid.x(i), grid.y(j), grid.z(k));
  return f;
}

}  // namespace curlclean
