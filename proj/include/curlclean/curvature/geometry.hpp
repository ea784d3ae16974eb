#pragma once
#include <cmath>
#include <cstddef>
#include <string>

#include "curlclean/core/errors.hpp"
#include "curlclean/core/field.hpp"
#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/sym3.hpp"

// Pointwise geometry chain for the relativity system: inverse metric,
// Christoffel symbols of the conformal and physical metric, their gradients,
// Ricci tensor, the Z-vector block and the lapse Hessian.  Everything is
// packed on symmetric index pairs and kept inline: this runs once per grid
// point per Runge-Kutta stage.
//
// One asymmetry subtlety: the discrete Ricci tensor built from symmetrized
// auxiliary gradients is NOT exactly symmetric (its antisymmetric part is of
// the order of the curl-constraint violation), so ric and covZ are stored as
// full 3x3 and consumers read the entries literally.

namespace curlclean {

struct PointGradients {
  const double* g[3] = {nullptr, nullptr, nullptr};  // gx/gy/gz at the point
  std::size_t stride = 0;
  double operator()(int dir, int c) const { return g[dir][std::size_t(c) * stride]; }
};

// Relativity state at one point, exponentials applied.
struct PointState {
  double alpha, phi;
  double beta[3];
  Sym3 g;         // conformal metric
  double k0, trk, theta;
  Sym3 at;
  double ghat[3], bdrv[3];
  double a[3], psia[3], phia;
  double b[9], psib[9];  // [3k+i]
  double phib[3];
  Sym3 d[3], psid[3], phid;
  double p[3], psip[3], phip;

  static PointState gather(const CompView& q) {
    PointState s;
    s.alpha = std::exp(q[fo::LNALPHA]);
    s.phi = std::exp(q[fo::LNPHI]);
    s.k0 = q[fo::K0];
    s.trk = q[fo::K];
    s.theta = q[fo::THETA];
    s.phia = q[fo::PHIA];
    s.phip = q[fo::PHIP];
    for (int i = 0; i < 3; ++i) {
      s.beta[i] = q[fo::BETA + i];
      s.ghat[i] = q[fo::GHAT + i];
      s.bdrv[i] = q[fo::BDRIVER + i];
      s.a[i] = q[fo::A + i];
      s.psia[i] = q[fo::PSIA + i];
      s.phib[i] = q[fo::PHIB + i];
      s.p[i] = q[fo::P + i];
      s.psip[i] = q[fo::PSIP + i];
    }
    for (int m = 0; m < 9; ++m) {
      s.b[m] = q[fo::B + m];
      s.psib[m] = q[fo::PSIB + m];
    }
    for (int sidx = 0; sidx < 6; ++sidx) {
      s.g[sidx] = q[fo::GT + sidx];
      s.at[sidx] = q[fo::AT + sidx];
      s.phid[sidx] = q[fo::PHID + sidx];
      for (int k = 0; k < 3; ++k) {
        s.d[k][sidx] = q[fo::D + 6 * k + sidx];
        s.psid[k][sidx] = q[fo::PSID + 6 * k + sidx];
      }
    }
    return s;
  }
};

// Symmetrized auxiliary gradients d_(a X_b): the curl involutions make the
// antisymmetric parts pure constraint violation, so the system only ever
// consumes these combinations.
struct SymGrads {
  double a[6];      // d_(a A_b),  pair index sym(a,b)
  double p[6];      // d_(a P_b)
  double b[6][3];   // d_(a B_b)^i
  double d[6][6];   // d_(a D_b)ij, second index sym(i,j)

  static SymGrads gather(const PointGradients& gr) {
    SymGrads sg;
    for (int x = 0; x < 3; ++x)
      for (int y = x; y < 3; ++y) {
        const int s = kSym6[x][y];
        sg.a[s] = 0.5 * (gr(x, fo::A + y) + gr(y, fo::A + x));
        sg.p[s] = 0.5 * (gr(x, fo::P + y) + gr(y, fo::P + x));
        for (int i = 0; i < 3; ++i)
          sg.b[s][i] = 0.5 * (gr(x, fo::bki(y, i)) + gr(y, fo::bki(x, i)));
        for (int t = 0; t < 6; ++t)
          sg.d[s][t] = 0.5 * (gr(x, fo::D + 6 * y + t) + gr(y, fo::D + 6 * x + t));
      }
    return sg;
  }
};

struct CurvatureBundle {
  Sym3 gi;                 // inverse conformal metric
  double det;              // det of the conformal metric (should stay near 1)
  Sym3 dup[3];             // D_k^ij
  double trat;             // ~gamma^ij ~A_ij
  Sym3 christ_t[3];        // ~Gamma^k_ij, [upper k]
  Sym3 christ[3];          // Gamma^k_ij of the physical metric
  Sym3 dchrist_t[3][3];    // d_k ~Gamma^m_ij, [k][m]
  Sym3 dchrist[3][3];      // d_k Gamma^m_ij
  double ric[3][3];        // R_ij (physical), full 3x3 (see note above)
  double gamtu[3];         // ~Gamma^i
  double dgamtu[3][3];     // d_k ~Gamma^i, [k][i]
  double zlo[3], zup[3];   // Z_i, Z^i
  double covz[3][3];       // nabla_i Z_j, full (not symmetric)
  Sym3 hessa;              // nabla_i nabla_j alpha
  double lapa;             // nabla^i nabla_i alpha
  double r2z;              // R + 2 nabla_k Z^k
};

// Sum over both indices of two symmetric objects: a_ij b^ij.
inline double sym_dot(const Sym3& a, const Sym3& b) {
  return a[0] * b[0] + a[3] * b[3] + a[5] * b[5] +
         2.0 * (a[1] * b[1] + a[2] * b[2] + a[4] * b[4]);
}

// Inverse of a symmetric 3x3 with near-unit determinant; returns det.
inline double invert_metric(const Sym3& g, Sym3& gi) {
  const double c00 = g[3] * g[5] - g[4] * g[4];
  const double c01 = g[2] * g[4] - g[1] * g[5];
  const double c02 = g[1] * g[4] - g[2] * g[3];
  const double det = g[0] * c00 + g[1] * c01 + g[2] * c02;
  const double inv = 1.0 / det;
  gi[0] = c00 * inv;
  gi[1] = c01 * inv;
  gi[2] = c02 * inv;
  gi[3] = (g[0] * g[5] - g[2] * g[2]) * inv;
  gi[4] = (g[2] * g[1] - g[0] * g[4]) * inv;
  gi[5] = (g[0] * g[3] - g[1] * g[1]) * inv;
  return det;
}

// Same inverse but refusing metrics that have drifted away from unit
// determinant far enough to be numerically meaningless.
inline double inverse_unit_det_metric(const Sym3& g, Sym3& gi) {
  const double det = invert_metric(g, gi);
  if (!(det > 1e-10))
    throw NumericsError("conformal metric determinant " + std::to_string(det) +
                        " is not positive enough to invert");
  return det;
}

// Congruence b = m a m for symmetric a and symmetric m (used to raise both
// indices: a^ij = m^ik m^jl a_kl).
inline Sym3 raise2(const Sym3& m, const Sym3& a) {
  double t[3][3];  // t = a m
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = a(i, 0) * m(0, j) + a(i, 1) * m(1, j) + a(i, 2) * m(2, j);
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      r(i, j) = m(i, 0) * t[0][j] + m(i, 1) * t[1][j] + m(i, 2) * t[2][j];
  return r;
}

// Full geometry chain in one fixed evaluation order.
inline void build_bundle(const PointState& s, const PointGradients& gr,
                         const SymGrads& sg, CurvatureBundle& B) {
  B.det = invert_metric(s.g, B.gi);
  for (int k = 0; k < 3; ++k) B.dup[k] = raise2(B.gi, s.d[k]);
  B.trat = sym_dot(B.gi, s.at);

  // T_l(i,j) = D_ijl + D_jil - D_lij  (symmetric in i,j)
  Sym3 T[3];
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        T[l](i, j) = s.d[i](j, l) + s.d[j](i, l) - s.d[l](i, j);

  // W_l(i,j) = g_jl P_i + g_il P_j - g_ij P_l  (the conformal correction)
  Sym3 W[3];
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        W[l](i, j) = s.g(j, l) * s.p[i] + s.g(i, l) * s.p[j] - s.g(i, j) * s.p[l];

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double ct = 0, corr = 0;
        for (int l = 0; l < 3; ++l) {
          ct += B.gi(k, l) * T[l](i, j);
          corr += B.gi(k, l) * W[l](i, j);
        }
        B.christ_t[k](i, j) = ct;
        B.christ[k](i, j) = ct - corr;
      }

  // SD[k][l](i,j) = d_(k D_i)jl + d_(k D_j)il - d_(k D_l)ij
  Sym3 SD[3][3];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          SD[k][l](i, j) = sg.d[kSym6[k][i]][kSym6[j][l]] +
                           sg.d[kSym6[k][j]][kSym6[i][l]] -
                           sg.d[kSym6[k][l]][kSym6[i][j]];

  // V[k][l](i,j) = D_kjl P_i + D_kil P_j - D_kij P_l
  // WP[k][l](i,j) = g_jl d_(k P_i) + g_il d_(k P_j) - g_ij d_(k P_l)
  Sym3 V[3][3], WP[3][3];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          V[k][l](i, j) = s.d[k](j, l) * s.p[i] + s.d[k](i, l) * s.p[j] -
                          s.d[k](i, j) * s.p[l];
          WP[k][l](i, j) = s.g(j, l) * sg.p[kSym6[k][i]] +
                           s.g(i, l) * sg.p[kSym6[k][j]] -
                           s.g(i, j) * sg.p[kSym6[k][l]];
        }

  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m)
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          double ct = 0, extra = 0;
          for (int l = 0; l < 3; ++l) {
            ct += -2.0 * B.dup[k](m, l) * T[l](i, j) + B.gi(m, l) * SD[k][l](i, j);
            extra += 2.0 * B.dup[k](m, l) * W[l](i, j) -
                     2.0 * B.gi(m, l) * V[k][l](i, j) - B.gi(m, l) * WP[k][l](i, j);
          }
          B.dchrist_t[k][m](i, j) = ct;
          B.dchrist[k][m](i, j) = ct + extra;
        }

  // Ricci by direct contraction R_ij = R^m_imj
  double cc[3];  // Gamma^m_lm
  for (int l = 0; l < 3; ++l)
    cc[l] = B.christ[0](l, 0) + B.christ[1](l, 1) + B.christ[2](l, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double r = 0;
      for (int m = 0; m < 3; ++m)
        r += B.dchrist[m][m](i, j) - B.dchrist[j][m](i, m);
      for (int l = 0; l < 3; ++l) {
        r += B.christ[l](i, j) * cc[l];
        for (int m = 0; m < 3; ++m) r -= B.christ[l](i, m) * B.christ[m](l, j);
      }
      B.ric[i][j] = r;
    }

  for (int i = 0; i < 3; ++i) B.gamtu[i] = sym_dot(B.gi, B.christ_t[i]);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      B.dgamtu[k][i] =
          -2.0 * sym_dot(B.dup[k], B.christ_t[i]) + sym_dot(B.gi, B.dchrist_t[k][i]);

  const double ph2 = s.phi * s.phi;
  double dg[3];  // Ghat^i - ~Gamma^i
  for (int i = 0; i < 3; ++i) dg[i] = s.ghat[i] - B.gamtu[i];
  for (int i = 0; i < 3; ++i) {
    B.zlo[i] = 0.5 * (s.g(i, 0) * dg[0] + s.g(i, 1) * dg[1] + s.g(i, 2) * dg[2]);
    B.zup[i] = 0.5 * ph2 * dg[i];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double r = 0;
      for (int l = 0; l < 3; ++l)
        r += s.d[i](j, l) * dg[l] +
             0.5 * s.g(j, l) * (gr(i, fo::GHAT + l) - B.dgamtu[i][l]) -
             B.christ[l](i, j) * B.zlo[l];
      B.covz[i][j] = r;
    }

  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double r = s.alpha * (s.a[i] * s.a[j] + sg.a[kSym6[i][j]]);
      for (int k = 0; k < 3; ++k) r -= s.alpha * B.christ[k](i, j) * s.a[k];
      B.hessa(i, j) = r;
    }
  B.lapa = ph2 * sym_dot(B.gi, B.hessa);

  double r2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r2 += B.gi(i, j) * (B.ric[i][j] + B.covz[i][j] + B.covz[j][i]);
  B.r2z = ph2 * r2;
}

// Full Riemann tensor R^m_ikj from an already-built bundle (diagnostics and
// tests; the evolution only needs the Ricci contraction).
void riemann(const CurvatureBundle& B, double out[3][3][3][3]);

}  // namespace curlclean
