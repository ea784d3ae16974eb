#include "curlclean/systems/toy.hpp"

#include <algorithm>
#include <cmath>

#include "curlclean/core/toy_indices.hpp"

namespace curlclean {
namespace {

constexpr int kCl[3] = {1, 2, 0};
constexpr int kCm[3] = {2, 0, 1};

// Largest |v| and |J| based speed bound shared by both toy systems.
double toy_speed(const FieldSnapshot& f, const ToyParams& par, int mom0, int j0,
                 bool with_burgers) {
  const std::size_t n = f.grid.n();
  double vmax = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const double rho = f.comp(toy::RHO)[p];
    double vf = 0, jn = 0;
    for (int k = 0; k < 3; ++k) {
      vf = std::max(vf, std::abs(f.comp(mom0 + k)[p] / rho));
      jn = std::max(jn, std::abs(f.comp(j0 + k)[p]));
    }
    const double sound = par.c0 * par.c0 * jn * (jn + std::max(1.0, rho));
    vmax = std::max(vmax, 2.0 * vf + sound);
  }
  if (par.glm_enabled) {
    vmax = std::max({vmax, par.a_c, par.a_d});
    if (with_burgers) vmax = std::max(vmax, par.a_b);
  }
  return vmax;
}

}  // namespace

ToyHomogeneousSystem::ToyHomogeneousSystem(const ToyParams& par) : par_(par) {
  lay_ = &layout_for(SystemKind::toy_homogeneous);
  mask_.assign(lay_->count, 1);
  if (!par_.glm_enabled) {
    for (int k = 0; k < 3; ++k) mask_[toy::PSI + k] = 0;
    mask_[toy::PHI] = 0;
  }
  damp_ = mask_;  // frozen cleaning fields also skip dissipation
  fams_ = {{"curlJ", 3}, {"divpsi", 1}};
}

void ToyHomogeneousSystem::rhs_point(const PointContext&, const CompView& q,
                                     const PointGradients& d, double* out) const {
  using namespace toy;
  const double rho = q[RHO];
  double v[3], Jv[3];
  for (int k = 0; k < 3; ++k) {
    v[k] = q[MOM + k] / rho;
    Jv[k] = q[J + k];
  }
  double dv[3][3];  // dv[a][m] = d_a v_m via the product rule
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 3; ++m)
      dv[a][m] = (d(a, MOM + m) - v[m] * d(a, RHO)) / rho;

  out[RHO] = -(d(0, MOM) + d(1, MOM + 1) + d(2, MOM + 2));

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    for (int i = 0; i < 3; ++i) {
      a -= v[k] * d(i, MOM + i) + v[i] * d(i, MOM + k) - v[i] * v[k] * d(i, RHO);
      a -= par_.c0 * par_.c0 *
           (Jv[i] * Jv[k] * d(i, RHO) + rho * Jv[k] * d(i, J + i) +
            rho * Jv[i] * d(i, J + k));
    }
    out[MOM + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    for (int m = 0; m < 3; ++m) {
      a -= Jv[m] * dv[k][m] + v[m] * d(k, J + m);
      a -= v[m] * (d(m, J + k) - d(k, J + m));
    }
    if (par_.glm_enabled)
      a -= d(kCl[k], PSI + kCm[k]) - d(kCm[k], PSI + kCl[k]);
    out[J + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    if (par_.glm_enabled) {
      a = -par_.eps_c * q[PSI + k] - d(k, PHI) +
          par_.a_c * par_.a_c * (d(kCl[k], J + kCm[k]) - d(kCm[k], J + kCl[k]));
    }
    out[PSI + k] = a;
  }
  out[PHI] = par_.glm_enabled
                 ? -par_.eps_d * q[PHI] -
                       par_.a_d * par_.a_d * (d(0, PSI) + d(1, PSI + 1) + d(2, PSI + 2))
                 : 0.0;
}

double ToyHomogeneousSystem::max_signal_speed(const FieldSnapshot& f) const {
  return toy_speed(f, par_, toy::MOM, toy::J, false);
}

void ToyHomogeneousSystem::residual_point(const PointContext&, const CompView&,
                                          const PointGradients& d,
                                          double* out) const {
  using namespace toy;
  static constexpr int kPl[3] = {0, 0, 1};
  static constexpr int kPk[3] = {1, 2, 2};
  for (int p = 0; p < 3; ++p)
    out[p] = d(kPl[p], J + kPk[p]) - d(kPk[p], J + kPl[p]);
  out[3] = d(0, PSI) + d(1, PSI + 1) + d(2, PSI + 2);
}

ToyNonhomogeneousSystem::ToyNonhomogeneousSystem(const ToyParams& par) : par_(par) {
  lay_ = &layout_for(SystemKind::toy_nonhomogeneous);
  mask_.assign(lay_->count, 1);
  if (!par_.glm_enabled) {
    for (int k = 0; k < 3; ++k) mask_[toy::PSI_NH + k] = 0;
    mask_[toy::PHI_NH] = 0;
    mask_[toy::CHI_NH] = 0;
  }
  damp_ = mask_;
  fams_ = {{"curlJ_minus_B", 3}, {"divB", 1}, {"divpsi", 1}};
}

void ToyNonhomogeneousSystem::rhs_point(const PointContext&, const CompView& q,
                                        const PointGradients& d, double* out) const {
  using namespace toy;
  const double rho = q[RHO];
  double v[3], Jv[3], Bv[3];
  for (int k = 0; k < 3; ++k) {
    v[k] = q[MOM + k] / rho;
    Jv[k] = q[J + k];
    Bv[k] = q[BURG + k];
  }
  double dv[3][3];
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 3; ++m)
      dv[a][m] = (d(a, MOM + m) - v[m] * d(a, RHO)) / rho;

  // torsion source and its gradient
  double S[3] = {0, 0, 0}, dS[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  if (par_.source == ToySource::linear_relaxation) {
    for (int k = 0; k < 3; ++k) {
      S[k] = -Jv[k] / par_.tau_relax;
      for (int l = 0; l < 3; ++l) dS[l][k] = -d(l, J + k) / par_.tau_relax;
    }
  }

  out[RHO] = -(d(0, MOM) + d(1, MOM + 1) + d(2, MOM + 2));

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    for (int i = 0; i < 3; ++i) {
      a -= v[k] * d(i, MOM + i) + v[i] * d(i, MOM + k) - v[i] * v[k] * d(i, RHO);
      a -= par_.c0 * par_.c0 *
           (Jv[i] * Jv[k] * d(i, RHO) + rho * Jv[k] * d(i, J + i) +
            rho * Jv[i] * d(i, J + k));
    }
    out[MOM + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = S[k];
    for (int m = 0; m < 3; ++m) {
      a -= Jv[m] * dv[k][m] + v[m] * d(k, J + m);
      a -= v[m] * (d(m, J + k) - d(k, J + m));
    }
    if (par_.glm_enabled)
      a -= d(kCl[k], PSI_NH + kCm[k]) - d(kCm[k], PSI_NH + kCl[k]);
    out[J + k] = a;
  }

  for (int i = 0; i < 3; ++i) {
    double a = 0;
    for (int k = 0; k < 3; ++k) {
      a -= Bv[i] * dv[k][k] + v[k] * d(k, BURG + i);
      a += v[i] * d(k, BURG + k) + Bv[k] * dv[k][i];
      for (int j = 0; j < 3; ++j)
        a += 0.5 * double((i - k) * (k - j) * (j - i)) * dS[k][j];
      a -= v[i] * d(k, BURG + k);
    }
    if (par_.glm_enabled) a -= d(i, CHI_NH);
    out[BURG + i] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    if (par_.glm_enabled) {
      a = -par_.eps_c * q[PSI_NH + k] - d(k, PHI_NH) - par_.a_c * par_.a_c * Bv[k] +
          par_.a_c * par_.a_c *
              (d(kCl[k], J + kCm[k]) - d(kCm[k], J + kCl[k]));
    }
    out[PSI_NH + k] = a;
  }
  out[PHI_NH] = par_.glm_enabled
                    ? -par_.eps_d * q[PHI_NH] -
                          par_.a_d * par_.a_d *
                              (d(0, PSI_NH) + d(1, PSI_NH + 1) + d(2, PSI_NH + 2))
                    : 0.0;
  out[CHI_NH] = par_.glm_enabled
                    ? -par_.eps_b * q[CHI_NH] -
                          par_.a_b * par_.a_b *
                              (d(0, BURG) + d(1, BURG + 1) + d(2, BURG + 2))
                    : 0.0;
}

double ToyNonhomogeneousSystem::max_signal_speed(const FieldSnapshot& f) const {
  return toy_speed(f, par_, toy::MOM, toy::J, true);
}

void ToyNonhomogeneousSystem::residual_point(const PointContext&,
                                             const CompView& q,
                                             const PointGradients& d,
                                             double* out) const {
  using namespace toy;
  // curl J should equal the Burgers vector; compare pairwise, where the pair
  // (l,k) corresponds to the axial component via the alternating symbol
  static constexpr int kPl[3] = {0, 0, 1};
  static constexpr int kPk[3] = {1, 2, 2};
  const double bax[3] = {q[BURG + 2], -q[BURG + 1], q[BURG + 0]};
  for (int p = 0; p < 3; ++p)
    out[p] = d(kPl[p], J + kPk[p]) - d(kPk[p], J + kPl[p]) - bax[p];
  out[3] = d(0, BURG) + d(1, BURG + 1) + d(2, BURG + 2);
  out[4] = d(0, PSI_NH) + d(1, PSI_NH + 1) + d(2, PSI_NH + 2);
}

}  // namespace curlclean
