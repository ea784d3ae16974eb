#include "curlclean/systems/foccz4.hpp"

#include <cmath>
#include <string>

namespace curlclean {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double k13 = 1.0 / 3.0;
constexpr double k23 = 2.0 / 3.0;

// eps_klm d_l X_m for component k reduces to one cyclic difference:
// kCl[k] is the gradient direction of the + term, kCm[k] its component.
constexpr int kCl[3] = {1, 2, 0};
constexpr int kCm[3] = {2, 0, 1};

inline double curl3(const PointGradients& d, int base, int k) {
  return d(kCl[k], base + kCm[k]) - d(kCm[k], base + kCl[k]);
}

}  // namespace

void RigidRotation::velocity(double x, double y, double z, double v[3]) const {
  const double r = std::sqrt(x * x + y * y + z * z);
  double w = 0;
  if (r < r_cut) {
    w = 1.0;
    if (smooth > 0 && r > r_cut - smooth) {
      const double u = (r_cut - r) / smooth;
      w = u * u * (3.0 - 2.0 * u);
    }
  }
  v[0] = w * (omega[1] * z - omega[2] * y);
  v[1] = w * (omega[2] * x - omega[0] * z);
  v[2] = w * (omega[0] * y - omega[1] * x);
}

FOCCZ4System::FOCCZ4System(const CCZ4Params& par) : par_(par) {
  lay_ = &layout_for(SystemKind::foccz4);
  fill_mask();
}

FOCCZ4System::FOCCZ4System(const CCZ4Params& par, const RigidRotation& rot)
    : par_(par), has_tau_(true), rot_(rot) {
  lay_ = &foccz4_tau_layout();
  fill_mask();
}

void FOCCZ4System::fill_mask() {
  mask_.assign(lay_->count, 1);
  // lapse, shift, metric and conformal factor enter only through their
  // first-order auxiliaries; their own gradients are never read.
  for (int c = fo::LNALPHA; c <= fo::LNPHI; ++c) mask_[c] = 0;
  if (par_.s == 0.0)
    for (int i = 0; i < 3; ++i) mask_[fo::BDRIVER + i] = 0;
  if (!par_.glm_enabled) {
    for (int i = 0; i < 3; ++i) {
      mask_[fo::PSIA + i] = 0;
      mask_[fo::PHIB + i] = 0;
      mask_[fo::PSIP + i] = 0;
    }
    for (int m = 0; m < 9; ++m) mask_[fo::PSIB + m] = 0;
    for (int t = 0; t < 6; ++t) mask_[fo::PHID + t] = 0;
    for (int m = 0; m < 18; ++m) mask_[fo::PSID + m] = 0;
    mask_[fo::PHIA] = 0;
    mask_[fo::PHIP] = 0;
  }

  damp_.assign(lay_->count, 1);
  damp_[fo::K0] = 0;  // stays exactly at its initial value
  if (!par_.glm_enabled)
    for (int c = 0; c < fo::NVAR; ++c)
      if (fo::is_cleaning_component(c)) damp_[c] = 0;

  fams_ = {{"H", 1},        {"M", 3},        {"curlA", 3},   {"curlP", 3},
           {"curlB", 9},    {"curlD", 18},   {"divpsiA", 1}, {"divpsiP", 1},
           {"divpsiB", 3},  {"divpsiD", 6}};
}

void FOCCZ4System::rhs_point(const PointContext& pc, const CompView& q,
                             const PointGradients& d, double* out) const {
  MatterRecord mat;
  if (has_tau_) mat.tau = q[fo::TAU];
  try {
    rhs_with_matter(q, d, mat, out);
  } catch (const NumericsError& err) {
    throw NumericsError(std::string(err.what()) + " at cell (" +
                        std::to_string(pc.i) + "," + std::to_string(pc.j) + "," +
                        std::to_string(pc.k) + ")");
  }
  if (has_tau_) {
    double v[3];
    rot_.velocity(pc.x, pc.y, pc.z, v);
    out[fo::TAU] =
        -(v[0] * d(0, fo::TAU) + v[1] * d(1, fo::TAU) + v[2] * d(2, fo::TAU));
  }
}

void FOCCZ4System::rhs_with_matter(const CompView& q, const PointGradients& d,
                                   const MatterRecord& mat, double* out) const {
  const CCZ4Params& par = par_;
  const PointState s = PointState::gather(q);
  if (!std::isfinite(s.alpha) || !std::isfinite(s.phi))
    throw NumericsError("lapse or conformal factor is not finite");
  {
    Sym3 gi_chk;
    inverse_unit_det_metric(s.g, gi_chk);
  }
  const SymGrads sg = SymGrads::gather(d);
  CurvatureBundle B;
  build_bundle(s, d, sg, B);

  const double al = s.alpha;
  const double ph2 = s.phi * s.phi;
  const double gal = par.g_of_alpha(al);
  const double hal = par.h_of_alpha(al);
  const double cpar = par.c, e = par.e, sc = par.s, fpar = par.f;
  const bool glm = par.glm_enabled;

  const double trB = s.b[0] + s.b[4] + s.b[8];
  const Sym3 atup = raise2(B.gi, s.at);
  const double atat = sym_dot(s.at, atup);

  double str = 0;  // matter trace S = phi^2 ~gamma^ij S_ij
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) str += ph2 * B.gi(i, j) * mat.Sij[i][j];

  // contractions shared by several equations:
  // t1_k = ~gamma^nm d_k At_nm,  t2_k = D_k^nm At_nm
  double t1[3], t2[3];
  for (int k = 0; k < 3; ++k) {
    Sym3 dat;
    for (int t = 0; t < 6; ++t) dat[t] = d(k, fo::AT + t);
    t1[k] = sym_dot(B.gi, dat);
    t2[k] = sym_dot(B.dup[k], s.at);
  }

  for (int c = 0; c < lay_->count; ++c) out[c] = 0;

  // ---- metric / gauge sector ----
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double r = -k23 * s.g(i, j) * trB -
                 2.0 * al * (s.at(i, j) - k13 * s.g(i, j) * B.trat);
      for (int k = 0; k < 3; ++k)
        r += s.beta[k] * 2.0 * s.d[k](i, j) + s.g(k, i) * s.b[3 * j + k] +
             s.g(k, j) * s.b[3 * i + k];
      out[fo::gt(i, j)] = r;
    }
  {
    double r = -al * gal * (s.trk - s.k0 - 2.0 * s.theta * cpar);
    for (int k = 0; k < 3; ++k) r += s.beta[k] * s.a[k];
    out[fo::LNALPHA] = r;
  }
  for (int i = 0; i < 3; ++i) {
    double r = sc * fpar * s.bdrv[i];
    for (int k = 0; k < 3; ++k) r += sc * s.beta[k] * s.b[3 * k + i];
    out[fo::BETA + i] = r;
  }
  {
    double r = k13 * (al * s.trk - trB);
    for (int k = 0; k < 3; ++k) r += s.beta[k] * s.p[k];
    out[fo::LNPHI] = r;
  }
  out[fo::K0] = 0;

  // ---- curvature sector ----
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double r = 0;
      for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, fo::at(i, j));
      r -= ph2 * (B.hessa(i, j) -
                  al * (B.ric[i][j] + B.covz[i][j] + B.covz[j][i] -
                        8.0 * kPi * mat.Sij[i][j]));
      r += k13 * s.g(i, j) * (B.lapa - al * (B.r2z - 8.0 * kPi * str));
      for (int k = 0; k < 3; ++k)
        r += s.at(k, i) * s.b[3 * j + k] + s.at(k, j) * s.b[3 * i + k];
      r -= k23 * s.at(i, j) * trB;
      r += al * s.at(i, j) * (s.trk - 2.0 * s.theta * cpar);
      double sq = 0;
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) sq += s.at(i, l) * B.gi(l, m) * s.at(m, j);
      r -= 2.0 * al * sq;
      out[fo::at(i, j)] = r;
    }
  {
    double r = 0;
    for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, fo::K);
    r += -B.lapa + al * B.r2z + al * s.trk * (s.trk - 2.0 * s.theta * cpar) -
         3.0 * al * par.kappa1 * (1.0 + par.kappa2) * s.theta +
         4.0 * kPi * al * (str - 3.0 * mat.tau);
    out[fo::K] = r;
  }
  {
    double r = 0;
    for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, fo::THETA);
    r += 0.5 * al * e * e * B.r2z;
    r += al * e * e * (k13 * s.trk * s.trk - 0.5 * atat - 8.0 * kPi * mat.tau);
    r -= al * s.theta * s.trk * cpar;
    for (int i = 0; i < 3; ++i) r -= B.zup[i] * al * s.a[i];
    r -= al * par.kappa1 * (2.0 + par.kappa2) * s.theta;
    out[fo::THETA] = r;
  }
  // contracted connection: keep the non-advective part, the shift driver
  // b^i re-uses it.
  double ghat_noadv[3];
  for (int i = 0; i < 3; ++i) {
    double r = 0;
    for (int j = 0; j < 3; ++j) r -= (4.0 / 3.0) * al * B.gi(i, j) * d(j, fo::K);
    for (int k = 0; k < 3; ++k) r += 2.0 * al * B.gi(k, i) * d(k, fo::THETA);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) r += B.gi(k, l) * sg.b[kSym6[k][l]][i];
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) r += k13 * B.gi(i, k) * sg.b[kSym6[k][l]][l];
    for (int k = 0; k < 3; ++k) r += 2.0 * sc * al * B.gi(i, k) * t1[k];
    r += k23 * B.gamtu[i] * trB;
    for (int k = 0; k < 3; ++k) r -= B.gamtu[k] * s.b[3 * k + i];
    r += 2.0 * al * sym_dot(B.christ_t[i], atup);
    for (int j = 0; j < 3; ++j) r -= 6.0 * al * atup(i, j) * s.p[j];
    for (int k = 0; k < 3; ++k)
      r -= 2.0 * al * B.gi(k, i) * (s.theta * s.a[k] + k23 * s.trk * B.zlo[k]);
    for (int j = 0; j < 3; ++j) r -= 2.0 * al * atup(i, j) * s.a[j];
    for (int k = 0; k < 3; ++k) r -= 4.0 * sc * al * B.gi(i, k) * t2[k];
    for (int j = 0; j < 3; ++j)
      r += 2.0 * par.kappa3 * k23 * B.gi(i, j) * B.zlo[j] * trB;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r -= 2.0 * par.kappa3 * B.gi(j, k) * B.zlo[j] * s.b[3 * k + i];
    for (int j = 0; j < 3; ++j) r -= 2.0 * al * par.kappa1 * B.gi(i, j) * B.zlo[j];
    for (int j = 0; j < 3; ++j) r -= 16.0 * kPi * al * B.gi(i, j) * mat.S[j];
    ghat_noadv[i] = r;
  }
  for (int i = 0; i < 3; ++i) {
    double adv = 0, advb = 0;
    for (int k = 0; k < 3; ++k) {
      adv += s.beta[k] * d(k, fo::GHAT + i);
      if (sc != 0.0) advb += s.beta[k] * d(k, fo::BDRIVER + i);
    }
    out[fo::GHAT + i] = adv + ghat_noadv[i];
    out[fo::BDRIVER + i] = sc * advb + sc * (ghat_noadv[i] - par.eta * s.bdrv[i]);
  }

  // ---- auxiliary sector with curl cleaning ----
  for (int k = 0; k < 3; ++k) {
    double r = 0;
    for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, fo::A + k);
    if (glm) r -= curl3(d, fo::PSIA, k);
    r -= al * gal * (d(k, fo::K) - d(k, fo::K0) - 2.0 * cpar * d(k, fo::THETA));
    r -= sc * al * gal * t1[k];
    r += 2.0 * sc * al * gal * t2[k];
    r -= al * s.a[k] * (s.trk - s.k0 - 2.0 * s.theta * cpar) * hal;
    for (int l = 0; l < 3; ++l) r += s.b[3 * k + l] * s.a[l];
    out[fo::A + k] = r;

    if (glm)
      out[fo::PSIA + k] = -par.fam_a.eps_c * s.psia[k] - d(k, fo::PHIA) +
                          par.fam_a.a_c * par.fam_a.a_c * curl3(d, fo::A, k);
  }
  if (glm)
    out[fo::PHIA] = -par.fam_a.eps_d * s.phia -
                    par.fam_a.a_d * par.fam_a.a_d *
                        (d(0, fo::PSIA) + d(1, fo::PSIA + 1) + d(2, fo::PSIA + 2));

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      double r = 0;
      if (glm)
        r -= d(kCl[k], fo::psib(kCm[k], i)) - d(kCm[k], fo::psib(kCl[k], i));
      if (sc != 0.0) {
        double a = 0;
        for (int l = 0; l < 3; ++l) a += s.beta[l] * d(l, fo::bki(k, i));
        a += fpar * d(k, fo::BDRIVER + i);
        for (int j = 0; j < 3; ++j)
          a -= al * al * par.mu * B.gi(i, j) * (d(k, fo::P + j) - d(j, fo::P + k));
        for (int j = 0; j < 3; ++j)
          for (int n = 0; n < 3; ++n)
            for (int l = 0; l < 3; ++l)
              a += al * al * par.mu * B.gi(i, j) * B.gi(n, l) *
                   (d(k, fo::dk(l, j, n)) - d(l, fo::dk(k, j, n)));
        for (int l = 0; l < 3; ++l) a += s.b[3 * k + l] * s.b[3 * l + i];
        r += sc * a;
      }
      out[fo::bki(k, i)] = r;

      if (glm)
        out[fo::psib(k, i)] =
            -par.fam_b.eps_c * s.psib[3 * k + i] - d(k, fo::PHIB + i) +
            par.fam_b.a_c * par.fam_b.a_c *
                (d(kCl[k], fo::bki(kCm[k], i)) - d(kCm[k], fo::bki(kCl[k], i)));
    }
  if (glm)
    for (int i = 0; i < 3; ++i)
      out[fo::PHIB + i] =
          -par.fam_b.eps_d * s.phib[i] -
          par.fam_b.a_d * par.fam_b.a_d *
              (d(0, fo::psib(0, i)) + d(1, fo::psib(1, i)) + d(2, fo::psib(2, i)));

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double r = 0;
        for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, fo::dk(k, i, j));
        if (glm)
          r -= d(kCl[k], fo::psid(kCm[k], i, j)) - d(kCm[k], fo::psid(kCl[k], i, j));
        if (sc != 0.0) {
          double a = 0;
          for (int m = 0; m < 3; ++m)
            a += 0.5 * s.g(m, i) * sg.b[kSym6[k][j]][m] +
                 0.5 * s.g(m, j) * sg.b[kSym6[k][i]][m];
          for (int m = 0; m < 3; ++m) a -= k13 * s.g(i, j) * sg.b[kSym6[k][m]][m];
          r += sc * a;
        }
        r -= al * d(k, fo::at(i, j));
        r += k13 * al * s.g(i, j) * t1[k];
        for (int l = 0; l < 3; ++l)
          r += s.b[3 * k + l] * s.d[l](i, j) + s.b[3 * j + l] * s.d[k](l, i) +
               s.b[3 * i + l] * s.d[k](l, j);
        r -= k23 * trB * s.d[k](i, j);
        r -= k23 * al * s.g(i, j) * t2[k];
        r -= al * s.a[k] * (s.at(i, j) - k13 * s.g(i, j) * B.trat);
        out[fo::dk(k, i, j)] = r;

        if (glm)
          out[fo::psid(k, i, j)] =
              -par.fam_d.eps_c * s.psid[k](i, j) - d(k, fo::phid(i, j)) +
              par.fam_d.a_c * par.fam_d.a_c *
                  (d(kCl[k], fo::dk(kCm[k], i, j)) -
                   d(kCm[k], fo::dk(kCl[k], i, j)));
      }
  if (glm)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        out[fo::phid(i, j)] =
            -par.fam_d.eps_d * s.phid(i, j) -
            par.fam_d.a_d * par.fam_d.a_d *
                (d(0, fo::psid(0, i, j)) + d(1, fo::psid(1, i, j)) +
                 d(2, fo::psid(2, i, j)));

  for (int k = 0; k < 3; ++k) {
    double r = 0;
    for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, fo::P + k);
    if (glm) r -= curl3(d, fo::PSIP, k);
    r += k13 * al * d(k, fo::K);
    for (int i = 0; i < 3; ++i) r -= k13 * sg.b[kSym6[k][i]][i];
    r += sc * k13 * al * t1[k];
    r += k13 * al * s.a[k] * s.trk;
    for (int l = 0; l < 3; ++l) r += s.b[3 * k + l] * s.p[l];
    r -= sc * k23 * al * t2[k];
    out[fo::P + k] = r;

    if (glm)
      out[fo::PSIP + k] = -par.fam_p.eps_c * s.psip[k] - d(k, fo::PHIP) +
                          par.fam_p.a_c * par.fam_p.a_c * curl3(d, fo::P, k);
  }
  if (glm)
    out[fo::PHIP] = -par.fam_p.eps_d * s.phip -
                    par.fam_p.a_d * par.fam_p.a_d *
                        (d(0, fo::PSIP) + d(1, fo::PSIP + 1) + d(2, fo::PSIP + 2));
}

void FOCCZ4System::adm_point(const CompView& q, const PointGradients& d,
                             const MatterRecord& mat, double* H,
                             double M[3]) const {
  const PointState s = PointState::gather(q);
  const SymGrads sg = SymGrads::gather(d);
  CurvatureBundle B;
  build_bundle(s, d, sg, B);
  const double ph2 = s.phi * s.phi;

  // physical extrinsic curvature K_ij = phi^-2 (At_ij + 1/3 K ~g_ij) and its
  // gradient via the chain rule on the first-order auxiliaries
  Sym3 kij, dk[3];
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      kij(i, j) = (s.at(i, j) + k13 * s.trk * s.g(i, j)) / ph2;
      for (int l = 0; l < 3; ++l)
        dk[l](i, j) = (d(l, fo::at(i, j)) - 2.0 * s.p[l] * s.at(i, j) +
                       k13 * (s.g(i, j) * d(l, fo::K) +
                              2.0 * s.trk * s.d[l](i, j) -
                              2.0 * s.trk * s.p[l] * s.g(i, j))) /
                      ph2;
    }

  const double ktr = ph2 * sym_dot(B.gi, kij);
  const Sym3 kup = raise2(B.gi, kij);
  const double kk = ph2 * ph2 * sym_dot(kij, kup);

  double r3 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r3 += ph2 * B.gi(i, j) * B.ric[i][j];

  *H = r3 - kk + ktr * ktr - 16.0 * kPi * mat.tau;

  for (int i = 0; i < 3; ++i) {
    double r = 0;
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        double t = dk[l](i, j) - dk[i](j, l);
        for (int m = 0; m < 3; ++m)
          t += -B.christ[m](j, l) * kij(m, i) + B.christ[m](j, i) * kij(m, l);
        r += ph2 * B.gi(j, l) * t;
      }
    M[i] = r - 8.0 * kPi * mat.S[i];
  }
}

void FOCCZ4System::residual_point(const PointContext& pc, const CompView& q,
                                  const PointGradients& d, double* out) const {
  MatterRecord mat;
  if (has_tau_) mat.tau = q[fo::TAU];
  double H, M[3];
  try {
    adm_point(q, d, mat, &H, M);
  } catch (const NumericsError& err) {
    throw NumericsError(std::string(err.what()) + " at cell (" +
                        std::to_string(pc.i) + "," + std::to_string(pc.j) + "," +
                        std::to_string(pc.k) + ")");
  }
  int o = 0;
  out[o++] = H;
  for (int i = 0; i < 3; ++i) out[o++] = M[i];

  // curl involutions over the independent index pairs (l < k)
  static constexpr int kPl[3] = {0, 0, 1};
  static constexpr int kPk[3] = {1, 2, 2};
  for (int p = 0; p < 3; ++p)
    out[o++] = d(kPl[p], fo::A + kPk[p]) - d(kPk[p], fo::A + kPl[p]);
  for (int p = 0; p < 3; ++p)
    out[o++] = d(kPl[p], fo::P + kPk[p]) - d(kPk[p], fo::P + kPl[p]);
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < 3; ++i)
      out[o++] = d(kPl[p], fo::bki(kPk[p], i)) - d(kPk[p], fo::bki(kPl[p], i));
  for (int p = 0; p < 3; ++p)
    for (int t = 0; t < 6; ++t)
      out[o++] = d(kPl[p], fo::D + 6 * kPk[p] + t) -
                 d(kPk[p], fo::D + 6 * kPl[p] + t);

  // divergence of the cleaning vectors (identically zero when cleaning is
  // off: those gradient planes are masked and stay zero)
  out[o++] = d(0, fo::PSIA) + d(1, fo::PSIA + 1) + d(2, fo::PSIA + 2);
  out[o++] = d(0, fo::PSIP) + d(1, fo::PSIP + 1) + d(2, fo::PSIP + 2);
  for (int i = 0; i < 3; ++i)
    out[o++] = d(0, fo::psib(0, i)) + d(1, fo::psib(1, i)) + d(2, fo::psib(2, i));
  for (int t = 0; t < 6; ++t)
    out[o++] = d(0, fo::PSID + t) + d(1, fo::PSID + 6 + t) +
               d(2, fo::PSID + 12 + t);
}

double FOCCZ4System::max_signal_speed(const FieldSnapshot& f) const {
  const std::size_t n = f.grid.n();
  const double* lna = f.comp(fo::LNALPHA);
  const double* lnp = f.comp(fo::LNPHI);
  double vmax = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const double al = std::exp(lna[p]);
    const double ph2 = std::exp(2.0 * lnp[p]);
    Sym3 g, gi;
    for (int t = 0; t < 6; ++t) g[t] = f.comp(fo::GT + t)[p];
    invert_metric(g, gi);
    double row = 0;
    for (int i = 0; i < 3; ++i) {
      const double r = std::abs(gi(i, 0)) + std::abs(gi(i, 1)) + std::abs(gi(i, 2));
      row = std::max(row, r);
    }
    const double cmax = std::sqrt(ph2 * row);
    double bmax = 0;
    for (int i = 0; i < 3; ++i)
      bmax = std::max(bmax, std::abs(f.comp(fo::BETA + i)[p]));
    const double fac = std::max({1.0, par_.g_of_alpha(al), par_.e * par_.e,
                                 par_.s * par_.f, par_.s * 2.0 * par_.mu});
    vmax = std::max(vmax, bmax + al * cmax * std::sqrt(fac));
  }
  if (par_.glm_enabled) {
    for (const CleaningFamily* fam :
         {&par_.fam_a, &par_.fam_b, &par_.fam_d, &par_.fam_p})
      vmax = std::max({vmax, fam->a_c, fam->a_d});
  }
  if (has_tau_) {
    const double om = std::sqrt(rot_.omega[0] * rot_.omega[0] +
                                rot_.omega[1] * rot_.omega[1] +
                                rot_.omega[2] * rot_.omega[2]);
    vmax = std::max(vmax, om * rot_.r_cut);
  }
  return vmax;
}

}  // namespace curlclean
