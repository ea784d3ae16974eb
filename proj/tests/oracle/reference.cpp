#include "oracle/reference.hpp"

#include <cmath>

namespace refimpl {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Own copy of the component enumeration, written out longhand: if the
// canonical layout ever drifts from this table, the equivalence tests fail.
enum : int {
  Q_LNALPHA = 0,
  Q_BETA = 1,      // +i
  Q_GT = 4,        // +sym
  Q_LNPHI = 10,
  Q_K0 = 11,
  Q_AT = 12,       // +sym
  Q_K = 18,
  Q_THETA = 19,
  Q_GHAT = 20,     // +i
  Q_BDRV = 23,     // +i
  Q_A = 26,        // +k
  Q_PSIA = 29,     // +k
  Q_PHIA = 32,
  Q_B = 33,        // +3k+i
  Q_PSIB = 42,     // +3k+i
  Q_PHIB = 51,     // +i
  Q_D = 54,        // +6k+sym
  Q_PSID = 72,     // +6k+sym
  Q_PHID = 90,     // +sym
  Q_P = 96,        // +k
  Q_PSIP = 99,     // +k
  Q_PHIP = 102,
  NQ = 103,
};

int sym(int i, int j) {
  static const int t[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return t[i][j];
}
int q_gt(int i, int j) { return Q_GT + sym(i, j); }
int q_at(int i, int j) { return Q_AT + sym(i, j); }
int q_b(int k, int i) { return Q_B + 3 * k + i; }
int q_psib(int k, int i) { return Q_PSIB + 3 * k + i; }
int q_d(int k, int i, int j) { return Q_D + 6 * k + sym(i, j); }
int q_psid(int k, int i, int j) { return Q_PSID + 6 * k + sym(i, j); }
int q_phid(int i, int j) { return Q_PHID + sym(i, j); }

// Levi-Civita symbol for 0-based indices.
double lc(int i, int j, int k) { return 0.5 * double((i - j) * (j - k) * (k - i)); }

// 3x3 symmetric inverse by adjugate over determinant.
void invert3(const double g[3][3], double gi[3][3]) {
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  gi[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  gi[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  gi[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  gi[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  gi[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  gi[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  gi[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  gi[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  gi[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
}

// Unpacked copy of the relativity state at one point.
struct St {
  double alpha, phi, K0, K, Th;
  double beta[3], Ghat[3], bdrv[3];
  double g[3][3], At[3][3];
  double Ak[3], psiA[3], phiA;
  double Bf[3][3], psiB[3][3];  // [k][i]
  double phiB[3];
  double Dt[3][3][3], psiD[3][3][3];  // [k][i][j], symmetric in (i,j)
  double phiD[3][3];
  double Pk[3], psiP[3], phiP;
};

St unpack(const double* q) {
  St s;
  s.alpha = std::exp(q[Q_LNALPHA]);
  s.phi = std::exp(q[Q_LNPHI]);
  s.K0 = q[Q_K0];
  s.K = q[Q_K];
  s.Th = q[Q_THETA];
  s.phiA = q[Q_PHIA];
  s.phiP = q[Q_PHIP];
  for (int i = 0; i < 3; ++i) {
    s.beta[i] = q[Q_BETA + i];
    s.Ghat[i] = q[Q_GHAT + i];
    s.bdrv[i] = q[Q_BDRV + i];
    s.Ak[i] = q[Q_A + i];
    s.psiA[i] = q[Q_PSIA + i];
    s.phiB[i] = q[Q_PHIB + i];
    s.Pk[i] = q[Q_P + i];
    s.psiP[i] = q[Q_PSIP + i];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s.g[i][j] = q[q_gt(i, j)];
      s.At[i][j] = q[q_at(i, j)];
      s.Bf[i][j] = q[q_b(i, j)];
      s.psiB[i][j] = q[q_psib(i, j)];
      s.phiD[i][j] = q[q_phid(i, j)];
      for (int k = 0; k < 3; ++k) {
        s.Dt[i][j][k] = q[q_d(i, j, k)];
        s.psiD[i][j][k] = q[q_psid(i, j, k)];
      }
    }
  return s;
}

struct Grad {
  const double* dq;
  double operator()(int dir, int c) const { return dq[dir * NQ + c]; }
};

}  // namespace

Geometry geometry(const double* q, const double* dq) {
  const St s = unpack(q);
  const Grad d{dq};
  Geometry G;

  invert3(s.g, G.gi);

  // D_k^ij = ~gamma^in ~gamma^mj D_knm
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double a = 0;
        for (int n = 0; n < 3; ++n)
          for (int m = 0; m < 3; ++m) a += G.gi[i][n] * G.gi[m][j] * s.Dt[k][n][m];
        G.dup[k][i][j] = a;
      }

  G.trAt = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G.trAt += G.gi[i][j] * s.At[i][j];

  // T_ijl = D_ijl + D_jil - D_lij
  double T[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        T[i][j][l] = s.Dt[i][j][l] + s.Dt[j][i][l] - s.Dt[l][i][j];

  // symmetrized auxiliary derivatives
  auto symD = [&](int a, int b, int i, int j) {
    return 0.5 * (d(a, q_d(b, i, j)) + d(b, q_d(a, i, j)));
  };
  auto symP = [&](int a, int b) { return 0.5 * (d(a, Q_P + b) + d(b, Q_P + a)); };
  auto symA = [&](int a, int b) { return 0.5 * (d(a, Q_A + b) + d(b, Q_A + a)); };

  // ~Gamma^k_ij and Gamma^k_ij
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double ct = 0, corr = 0;
        for (int l = 0; l < 3; ++l) {
          ct += G.gi[k][l] * T[i][j][l];
          corr += G.gi[k][l] *
                  (s.g[j][l] * s.Pk[i] + s.g[i][l] * s.Pk[j] - s.g[i][j] * s.Pk[l]);
        }
        G.christ_t[k][i][j] = ct;
        G.christ[k][i][j] = ct - corr;
      }

  // d_k ~Gamma^m_ij and d_k Gamma^m_ij
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double ct = 0, cf = 0;
          for (int l = 0; l < 3; ++l) {
            const double dsym = symD(k, i, j, l) + symD(k, j, i, l) - symD(k, l, i, j);
            ct += -2.0 * G.dup[k][m][l] * T[i][j][l] + G.gi[m][l] * dsym;
            cf += -2.0 * G.dup[k][m][l] * T[i][j][l] +
                  2.0 * G.dup[k][m][l] * (s.g[j][l] * s.Pk[i] + s.g[i][l] * s.Pk[j] -
                                          s.g[i][j] * s.Pk[l]) -
                  2.0 * G.gi[m][l] * (s.Dt[k][j][l] * s.Pk[i] + s.Dt[k][i][l] * s.Pk[j] -
                                      s.Dt[k][i][j] * s.Pk[l]) +
                  G.gi[m][l] * dsym -
                  G.gi[m][l] * (s.g[j][l] * symP(k, i) + s.g[i][l] * symP(k, j) -
                                s.g[i][j] * symP(k, l));
          }
          G.dchrist_t[k][m][i][j] = ct;
          G.dchrist[k][m][i][j] = cf;
        }

  // R^m_ikj = d_k Gamma^m_ij - d_j Gamma^m_ik + Gamma^l_ij Gamma^m_lk - Gamma^l_ik Gamma^m_lj
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
          double r = G.dchrist[k][m][i][j] - G.dchrist[j][m][i][k];
          for (int l = 0; l < 3; ++l)
            r += G.christ[l][i][j] * G.christ[m][l][k] -
                 G.christ[l][i][k] * G.christ[m][l][j];
          G.riem[m][i][k][j] = r;
        }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double r = 0;
      for (int m = 0; m < 3; ++m) r += G.riem[m][i][m][j];
      G.ric[i][j] = r;
    }

  // ~Gamma^i = ~gamma^jl ~Gamma^i_jl and its gradient
  for (int i = 0; i < 3; ++i) {
    double a = 0;
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) a += G.gi[j][l] * G.christ_t[i][j][l];
    G.gamtu[i] = a;
  }
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      double a = 0;
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
          a += -2.0 * G.dup[k][j][l] * G.christ_t[i][j][l] +
               G.gi[j][l] * G.dchrist_t[k][i][j][l];
      G.dgamtu[k][i] = a;
    }

  // Z_i = 1/2 ~gamma_ij (Ghat^j - ~Gamma^j),  Z^i = 1/2 phi^2 (Ghat^i - ~Gamma^i)
  for (int i = 0; i < 3; ++i) {
    double a = 0;
    for (int j = 0; j < 3; ++j) a += s.g[i][j] * (s.Ghat[j] - G.gamtu[j]);
    G.Z[i] = 0.5 * a;
    G.Zup[i] = 0.5 * s.phi * s.phi * (s.Ghat[i] - G.gamtu[i]);
  }

  // nabla_i Z_j = D_ijl (Ghat^l - ~Gamma^l) + 1/2 ~gamma_jl (d_i Ghat^l - d_i ~Gamma^l)
  //              - Gamma^l_ij Z_l
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double a = 0;
      for (int l = 0; l < 3; ++l)
        a += s.Dt[i][j][l] * (s.Ghat[l] - G.gamtu[l]) +
             0.5 * s.g[j][l] * (d(i, Q_GHAT + l) - G.dgamtu[i][l]) -
             G.christ[l][i][j] * G.Z[l];
      G.covZ[i][j] = a;
    }

  // nabla_i nabla_j alpha = alpha (A_i A_j - Gamma^k_ij A_k + d_(i A_j))
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double a = s.alpha * s.Ak[i] * s.Ak[j] + s.alpha * symA(i, j);
      for (int k = 0; k < 3; ++k) a -= s.alpha * G.christ[k][i][j] * s.Ak[k];
      G.hessa[i][j] = a;
    }
  G.lapa = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      G.lapa += s.phi * s.phi * G.gi[i][j] * G.hessa[i][j];

  G.r_plus_2divZ = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      G.r_plus_2divZ += s.phi * s.phi * G.gi[i][j] *
                        (G.ric[i][j] + G.covZ[i][j] + G.covZ[j][i]);
  return G;
}

void rhs_foccz4(const double* q, const double* dq, const curlclean::CCZ4Params& par,
                const Matter& mat, double* out) {
  const St s = unpack(q);
  const Grad d{dq};
  const Geometry G = geometry(q, dq);

  const double al = s.alpha, ph = s.phi;
  const double gal = par.g_of_alpha(al);
  const double hal = par.h_of_alpha(al);
  const double cpar = par.c, e = par.e, sc = par.s, fpar = par.f;
  const bool glm = par.glm_enabled;

  double trB = 0;
  for (int k = 0; k < 3; ++k) trB += s.Bf[k][k];

  // raised traceless curvature ~A^ij
  double Atup[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double a = 0;
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) a += G.gi[i][m] * G.gi[j][n] * s.At[m][n];
      Atup[i][j] = a;
    }
  double AtAt = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) AtAt += s.At[i][j] * Atup[i][j];

  // matter trace S = gamma^ij S_ij = phi^2 ~gamma^ij S_ij
  double Str = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Str += ph * ph * G.gi[i][j] * mat.Sij[i][j];

  auto symB = [&](int a, int b, int i) {
    return 0.5 * (d(a, q_b(b, i)) + d(b, q_b(a, i)));
  };
  auto symA = [&](int a, int b) { return 0.5 * (d(a, Q_A + b) + d(b, Q_A + a)); };
  (void)symA;

  for (int c = 0; c < NQ; ++c) out[c] = 0;

  // ---- metric / gauge sector (no spatial derivatives of their own) ----
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double r = -(2.0 / 3.0) * s.g[i][j] * trB -
                 2.0 * al * (s.At[i][j] - (1.0 / 3.0) * s.g[i][j] * G.trAt);
      for (int k = 0; k < 3; ++k)
        r += s.beta[k] * 2.0 * s.Dt[k][i][j] + s.g[k][i] * s.Bf[j][k] +
             s.g[k][j] * s.Bf[i][k];
      out[q_gt(i, j)] = r;
    }
  {
    double r = -al * gal * (s.K - s.K0 - 2.0 * s.Th * cpar);
    for (int k = 0; k < 3; ++k) r += s.beta[k] * s.Ak[k];
    out[Q_LNALPHA] = r;
  }
  for (int i = 0; i < 3; ++i) {
    double r = sc * fpar * s.bdrv[i];
    for (int k = 0; k < 3; ++k) r += sc * s.beta[k] * s.Bf[k][i];
    out[Q_BETA + i] = r;
  }
  {
    double r = (1.0 / 3.0) * (al * s.K - trB);
    for (int k = 0; k < 3; ++k) r += s.beta[k] * s.Pk[k];
    out[Q_LNPHI] = r;
  }
  out[Q_K0] = 0;

  // ---- curvature sector ----
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double r = 0;
      for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, q_at(i, j));
      r -= ph * ph * (G.hessa[i][j] -
                      al * (G.ric[i][j] + G.covZ[i][j] + G.covZ[j][i] -
                            8.0 * kPi * mat.Sij[i][j]));
      r += (1.0 / 3.0) * s.g[i][j] *
           (G.lapa - al * (G.r_plus_2divZ - 8.0 * kPi * Str));
      for (int k = 0; k < 3; ++k)
        r += s.At[k][i] * s.Bf[j][k] + s.At[k][j] * s.Bf[i][k];
      r -= (2.0 / 3.0) * s.At[i][j] * trB;
      r += al * s.At[i][j] * (s.K - 2.0 * s.Th * cpar);
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          r -= 2.0 * al * s.At[i][l] * G.gi[l][m] * s.At[m][j];
      out[q_at(i, j)] = r;
    }
  {
    double r = 0;
    for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, Q_K);
    r += -G.lapa + al * G.r_plus_2divZ + al * s.K * (s.K - 2.0 * s.Th * cpar) -
         3.0 * al * par.kappa1 * (1.0 + par.kappa2) * s.Th +
         4.0 * kPi * al * (Str - 3.0 * mat.tau);
    out[Q_K] = r;
  }
  {
    double r = 0;
    for (int k = 0; k < 3; ++k) r += s.beta[k] * d(k, Q_THETA);
    r += 0.5 * al * e * e * G.r_plus_2divZ;
    r += al * e * e *
         ((1.0 / 3.0) * s.K * s.K - 0.5 * AtAt - 8.0 * kPi * mat.tau);
    r -= al * s.Th * s.K * cpar;
    for (int i = 0; i < 3; ++i) r -= G.Zup[i] * al * s.Ak[i];
    r -= al * par.kappa1 * (2.0 + par.kappa2) * s.Th;
    out[Q_THETA] = r;
  }
  // Ghat^i: keep the non-advective part separately, the shift driver b^i
  // re-uses it.
  double ghat_noadv[3];
  for (int i = 0; i < 3; ++i) {
    double r = 0;
    for (int j = 0; j < 3; ++j) r -= (4.0 / 3.0) * al * G.gi[i][j] * d(j, Q_K);
    for (int k = 0; k < 3; ++k) r += 2.0 * al * G.gi[k][i] * d(k, Q_THETA);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) r += G.gi[k][l] * symB(k, l, i);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l)
        r += (1.0 / 3.0) * G.gi[i][k] * symB(k, l, l);
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m)
          r += 2.0 * sc * al * G.gi[i][k] * G.gi[n][m] * d(k, q_at(n, m));
    r += (2.0 / 3.0) * G.gamtu[i] * trB;
    for (int k = 0; k < 3; ++k) r -= G.gamtu[k] * s.Bf[k][i];
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r += 2.0 * al * G.christ_t[i][j][k] * Atup[j][k];
    for (int j = 0; j < 3; ++j) r -= 2.0 * al * 3.0 * Atup[i][j] * s.Pk[j];
    for (int k = 0; k < 3; ++k)
      r -= 2.0 * al * G.gi[k][i] * (s.Th * s.Ak[k] + (2.0 / 3.0) * s.K * G.Z[k]);
    for (int j = 0; j < 3; ++j) r -= 2.0 * al * Atup[i][j] * s.Ak[j];
    for (int k = 0; k < 3; ++k)
      for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m)
          r -= 4.0 * sc * al * G.gi[i][k] * G.dup[k][n][m] * s.At[n][m];
    for (int j = 0; j < 3; ++j)
      r += 2.0 * par.kappa3 * (2.0 / 3.0) * G.gi[i][j] * G.Z[j] * trB;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r -= 2.0 * par.kappa3 * G.gi[j][k] * G.Z[j] * s.Bf[k][i];
    for (int j = 0; j < 3; ++j) r -= 2.0 * al * par.kappa1 * G.gi[i][j] * G.Z[j];
    for (int j = 0; j < 3; ++j) r -= 16.0 * kPi * al * G.gi[i][j] * mat.S[j];
    ghat_noadv[i] = r;
  }
  for (int i = 0; i < 3; ++i) {
    double adv = 0, advb = 0;
    for (int k = 0; k < 3; ++k) {
      adv += s.beta[k] * d(k, Q_GHAT + i);
      advb += s.beta[k] * d(k, Q_BDRV + i);
    }
    out[Q_GHAT + i] = adv + ghat_noadv[i];
    out[Q_BDRV + i] = sc * advb + sc * (ghat_noadv[i] - par.eta * s.bdrv[i]);
  }

  // ---- auxiliary sector with curl cleaning ----
  for (int k = 0; k < 3; ++k) {
    double r = 0;
    for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, Q_A + k);
    if (glm)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) r -= lc(k, l, m) * d(l, Q_PSIA + m);
    r -= al * gal * (d(k, Q_K) - d(k, Q_K0) - 2.0 * cpar * d(k, Q_THETA));
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        r -= sc * al * gal * G.gi[n][m] * d(k, q_at(n, m));
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        r += 2.0 * sc * al * gal * G.dup[k][n][m] * s.At[n][m];
    r -= al * s.Ak[k] * (s.K - s.K0 - 2.0 * s.Th * cpar) * hal;
    for (int l = 0; l < 3; ++l) r += s.Bf[k][l] * s.Ak[l];
    out[Q_A + k] = r;

    if (glm) {
      double rp = -par.fam_a.eps_c * s.psiA[k] - d(k, Q_PHIA);
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          rp += par.fam_a.a_c * par.fam_a.a_c * lc(k, l, m) * d(l, Q_A + m);
      out[Q_PSIA + k] = rp;
    }
  }
  if (glm) {
    double r = -par.fam_a.eps_d * s.phiA;
    for (int m = 0; m < 3; ++m)
      r -= par.fam_a.a_d * par.fam_a.a_d * d(m, Q_PSIA + m);
    out[Q_PHIA] = r;
  }

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      double r = 0;
      for (int l = 0; l < 3; ++l) r += sc * s.beta[l] * d(l, q_b(k, i));
      if (glm)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m) r -= lc(k, l, m) * d(l, q_psib(m, i));
      r += sc * fpar * d(k, Q_BDRV + i);
      for (int j = 0; j < 3; ++j)
        r -= sc * al * al * par.mu * G.gi[i][j] * (d(k, Q_P + j) - d(j, Q_P + k));
      for (int j = 0; j < 3; ++j)
        for (int n = 0; n < 3; ++n)
          for (int l = 0; l < 3; ++l)
            r += sc * al * al * par.mu * G.gi[i][j] * G.gi[n][l] *
                 (d(k, q_d(l, j, n)) - d(l, q_d(k, j, n)));
      for (int l = 0; l < 3; ++l) r += sc * s.Bf[k][l] * s.Bf[l][i];
      out[q_b(k, i)] = r;

      if (glm) {
        double rp = -par.fam_b.eps_c * s.psiB[k][i] - d(k, Q_PHIB + i);
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            rp += par.fam_b.a_c * par.fam_b.a_c * lc(k, l, m) * d(l, q_b(m, i));
        out[q_psib(k, i)] = rp;
      }
    }
  if (glm)
    for (int i = 0; i < 3; ++i) {
      double r = -par.fam_b.eps_d * s.phiB[i];
      for (int m = 0; m < 3; ++m)
        r -= par.fam_b.a_d * par.fam_b.a_d * d(m, q_psib(m, i));
      out[Q_PHIB + i] = r;
    }

  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double r = 0;
        for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, q_d(k, i, j));
        if (glm)
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) r -= lc(k, l, m) * d(l, q_psid(m, i, j));
        for (int m = 0; m < 3; ++m)
          r += sc * (0.5 * s.g[m][i] * symB(k, j, m) + 0.5 * s.g[m][j] * symB(k, i, m));
        for (int m = 0; m < 3; ++m)
          r -= sc * (1.0 / 3.0) * s.g[i][j] * symB(k, m, m);
        r -= al * d(k, q_at(i, j));
        for (int n = 0; n < 3; ++n)
          for (int m = 0; m < 3; ++m)
            r += (1.0 / 3.0) * al * s.g[i][j] * G.gi[n][m] * d(k, q_at(n, m));
        for (int l = 0; l < 3; ++l)
          r += s.Bf[k][l] * s.Dt[l][i][j] + s.Bf[j][l] * s.Dt[k][l][i] +
               s.Bf[i][l] * s.Dt[k][l][j];
        r -= (2.0 / 3.0) * trB * s.Dt[k][i][j];
        for (int n = 0; n < 3; ++n)
          for (int m = 0; m < 3; ++m)
            r -= (2.0 / 3.0) * al * s.g[i][j] * G.dup[k][n][m] * s.At[n][m];
        r -= al * s.Ak[k] * (s.At[i][j] - (1.0 / 3.0) * s.g[i][j] * G.trAt);
        out[q_d(k, i, j)] = r;

        if (glm) {
          double rp = -par.fam_d.eps_c * s.psiD[k][i][j] - d(k, q_phid(i, j));
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
              rp += par.fam_d.a_c * par.fam_d.a_c * lc(k, l, m) * d(l, q_d(m, i, j));
          out[q_psid(k, i, j)] = rp;
        }
      }
  if (glm)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double r = -par.fam_d.eps_d * s.phiD[i][j];
        for (int m = 0; m < 3; ++m)
          r -= par.fam_d.a_d * par.fam_d.a_d * d(m, q_psid(m, i, j));
        out[q_phid(i, j)] = r;
      }

  for (int k = 0; k < 3; ++k) {
    double r = 0;
    for (int l = 0; l < 3; ++l) r += s.beta[l] * d(l, Q_P + k);
    if (glm)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) r -= lc(k, l, m) * d(l, Q_PSIP + m);
    r += (1.0 / 3.0) * al * d(k, Q_K);
    for (int i = 0; i < 3; ++i) r -= (1.0 / 3.0) * symB(k, i, i);
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        r += sc * (1.0 / 3.0) * al * G.gi[n][m] * d(k, q_at(n, m));
    r += (1.0 / 3.0) * al * s.Ak[k] * s.K;
    for (int l = 0; l < 3; ++l) r += s.Bf[k][l] * s.Pk[l];
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        r -= sc * (2.0 / 3.0) * al * G.dup[k][n][m] * s.At[n][m];
    out[Q_P + k] = r;

    if (glm) {
      double rp = -par.fam_p.eps_c * s.psiP[k] - d(k, Q_PHIP);
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          rp += par.fam_p.a_c * par.fam_p.a_c * lc(k, l, m) * d(l, Q_P + m);
      out[Q_PSIP + k] = rp;
    }
  }
  if (glm) {
    double r = -par.fam_p.eps_d * s.phiP;
    for (int m = 0; m < 3; ++m)
      r -= par.fam_p.a_d * par.fam_p.a_d * d(m, Q_PSIP + m);
    out[Q_PHIP] = r;
  }
}

void adm_constraints(const double* q, const double* dq, const Matter& mat,
                     double* H, double M[3]) {
  const St s = unpack(q);
  const Grad d{dq};
  const Geometry G = geometry(q, dq);
  const double ph2 = s.phi * s.phi;

  // physical extrinsic curvature K_ij = phi^-2 (~A_ij + 1/3 K ~gamma_ij)
  double Kij[3][3], dK[3][3][3];  // dK[l][i][j] = d_l K_ij
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Kij[i][j] = (s.At[i][j] + (1.0 / 3.0) * s.K * s.g[i][j]) / ph2;
      for (int l = 0; l < 3; ++l)
        dK[l][i][j] =
            (d(l, q_at(i, j)) - 2.0 * s.Pk[l] * s.At[i][j] +
             (1.0 / 3.0) * (s.g[i][j] * d(l, Q_K) + 2.0 * s.K * s.Dt[l][i][j] -
                            2.0 * s.K * s.Pk[l] * s.g[i][j])) /
            ph2;
    }

  // trace and full contraction with the physical inverse metric phi^2 ~gamma^ij
  double Ktr = 0, KK = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Ktr += ph2 * G.gi[i][j] * Kij[i][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          KK += Kij[i][j] * ph2 * G.gi[i][k] * ph2 * G.gi[j][l] * Kij[k][l];

  double R3 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) R3 += ph2 * G.gi[i][j] * G.ric[i][j];

  *H = R3 - KK + Ktr * Ktr - 16.0 * kPi * mat.tau;

  for (int i = 0; i < 3; ++i) {
    double r = 0;
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        double t = dK[l][i][j] - dK[i][j][l];
        for (int m = 0; m < 3; ++m)
          t += -G.christ[m][j][l] * Kij[m][i] + G.christ[m][j][i] * Kij[m][l];
        r += ph2 * G.gi[j][l] * t;
      }
    M[i] = r - 8.0 * kPi * mat.S[i];
  }
}

void curl_residuals(const double* dq, double calA[3][3], double calP[3][3],
                    double calB[3][3][3], double calD[3][3][3][3]) {
  const Grad d{dq};
  for (int l = 0; l < 3; ++l)
    for (int k = 0; k < 3; ++k) {
      calA[l][k] = d(l, Q_A + k) - d(k, Q_A + l);
      calP[l][k] = d(l, Q_P + k) - d(k, Q_P + l);
      for (int i = 0; i < 3; ++i)
        calB[l][k][i] = d(l, q_b(k, i)) - d(k, q_b(l, i));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          calD[l][k][i][j] = d(l, q_d(k, i, j)) - d(k, q_d(l, i, j));
    }
}

// ------------------------- demo systems -------------------------

namespace toyq {
enum : int { RHO = 0, MOM = 1, J = 4, PSI_H = 7, PHI_H = 10, NH = 11 };
enum : int { BURG = 7, PSI_N = 10, PHI_N = 13, CHI_N = 14, NN = 15 };
}  // namespace toyq

void rhs_toy_hom(const double* q, const double* dq, const curlclean::ToyParams& par,
                 double* out) {
  using namespace toyq;
  auto d = [&](int dir, int c) { return dq[dir * NH + c]; };
  const double rho = q[RHO];
  double v[3], Jv[3];
  for (int k = 0; k < 3; ++k) {
    v[k] = q[MOM + k] / rho;
    Jv[k] = q[J + k];
  }
  // d_a v_m from the product rule on the momentum component
  double dv[3][3];
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 3; ++m)
      dv[a][m] = (d(a, MOM + m) - v[m] * d(a, RHO)) / rho;

  double r = 0;
  for (int i = 0; i < 3; ++i) r -= d(i, MOM + i);
  out[RHO] = r;

  for (int k = 0; k < 3; ++k) {
    // -d_i(rho v_i v_k) - d_i(rho c0^2 J_i J_k), expanded on state gradients
    double a = 0;
    for (int i = 0; i < 3; ++i) {
      a -= v[k] * d(i, MOM + i) + v[i] * d(i, MOM + k) - v[i] * v[k] * d(i, RHO);
      a -= par.c0 * par.c0 * (Jv[i] * Jv[k] * d(i, RHO) + rho * Jv[k] * d(i, J + i) +
                              rho * Jv[i] * d(i, J + k));
    }
    out[MOM + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    for (int m = 0; m < 3; ++m) {
      a -= Jv[m] * dv[k][m] + v[m] * d(k, J + m);       // -d_k(v_m J_m)
      a -= v[m] * (d(m, J + k) - d(k, J + m));          // Godunov-Powell-type term
    }
    if (par.glm_enabled)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) a -= lc(k, l, m) * d(l, PSI_H + m);
    out[J + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    if (par.glm_enabled) {
      a = -par.eps_c * q[PSI_H + k] - d(k, PHI_H);
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          a += par.a_c * par.a_c * lc(k, l, m) * d(l, J + m);
    }
    out[PSI_H + k] = a;
  }
  {
    double a = 0;
    if (par.glm_enabled) {
      a = -par.eps_d * q[PHI_H];
      for (int m = 0; m < 3; ++m) a -= par.a_d * par.a_d * d(m, PSI_H + m);
    }
    out[PHI_H] = a;
  }
}

void rhs_toy_nonhom(const double* q, const double* dq, const curlclean::ToyParams& par,
                    const ToySourceEval& src, double* out) {
  using namespace toyq;
  auto d = [&](int dir, int c) { return dq[dir * NN + c]; };
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

  double r = 0;
  for (int i = 0; i < 3; ++i) r -= d(i, MOM + i);
  out[RHO] = r;

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    for (int i = 0; i < 3; ++i) {
      a -= v[k] * d(i, MOM + i) + v[i] * d(i, MOM + k) - v[i] * v[k] * d(i, RHO);
      a -= par.c0 * par.c0 * (Jv[i] * Jv[k] * d(i, RHO) + rho * Jv[k] * d(i, J + i) +
                              rho * Jv[i] * d(i, J + k));
    }
    out[MOM + k] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = src.S[k];
    for (int m = 0; m < 3; ++m) {
      a -= Jv[m] * dv[k][m] + v[m] * d(k, J + m);
      a -= v[m] * (d(m, J + k) - d(k, J + m));
    }
    if (par.glm_enabled)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) a -= lc(k, l, m) * d(l, PSI_N + m);
    out[J + k] = a;
  }

  // Burgers vector: d_t B_i + d_k(B_i v_k - v_i B_k - eps_ikj S_j)
  //                 + v_i d_k B_k + d_i chi = 0
  for (int i = 0; i < 3; ++i) {
    double a = 0;
    for (int k = 0; k < 3; ++k) {
      a -= Bv[i] * dv[k][k] + v[k] * d(k, BURG + i);   // -d_k(B_i v_k)
      a += v[i] * d(k, BURG + k) + Bv[k] * dv[k][i];   // +d_k(v_i B_k)
      for (int j = 0; j < 3; ++j) a += lc(i, k, j) * src.dS[k][j];
      a -= v[i] * d(k, BURG + k);                      // non-conservative term
    }
    if (par.glm_enabled) a -= d(i, CHI_N);
    out[BURG + i] = a;
  }

  for (int k = 0; k < 3; ++k) {
    double a = 0;
    if (par.glm_enabled) {
      a = -par.eps_c * q[PSI_N + k] - d(k, PHI_N) - par.a_c * par.a_c * Bv[k];
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          a += par.a_c * par.a_c * lc(k, l, m) * d(l, J + m);
    }
    out[PSI_N + k] = a;
  }
  {
    double a = 0;
    if (par.glm_enabled) {
      a = -par.eps_d * q[PHI_N];
      for (int m = 0; m < 3; ++m) a -= par.a_d * par.a_d * d(m, PSI_N + m);
    }
    out[PHI_N] = a;
  }
  {
    double a = 0;
    if (par.glm_enabled) {
      a = -par.eps_b * q[CHI_N];
      for (int m = 0; m < 3; ++m) a -= par.a_b * par.a_b * d(m, BURG + m);
    }
    out[CHI_N] = a;
  }
}

void rhs_induction(const double* q, const double* dq, const curlclean::GLMParams& par,
                   double* out) {
  enum : int { E = 0, B = 3, PHI = 6, N = 7 };
  auto d = [&](int dir, int c) { return dq[dir * N + c]; };
  for (int k = 0; k < 3; ++k) {
    double rE = 0, rB = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rE += par.c_light * par.c_light * lc(k, i, j) * d(i, B + j);
        rB -= lc(k, i, j) * d(i, E + j);
      }
    if (par.glm_enabled) rB -= d(k, PHI);
    out[E + k] = rE;
    out[B + k] = rB;
  }
  double r = 0;
  if (par.glm_enabled) {
    r = -par.eps_d * q[PHI];
    for (int m = 0; m < 3; ++m) r -= par.a_d * par.a_d * d(m, B + m);
  }
  out[PHI] = r;
}

}  // namespace refimpl
