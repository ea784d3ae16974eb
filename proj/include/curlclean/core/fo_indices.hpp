#pragma once
#include "curlclean/core/sym3.hpp"

// Component indices of the first-order CCZ4 state vector (103 entries).
//
//   0        ln(lapse)
//   1-3      shift beta^i
//   4-9      conformal metric ~g_ij            (sym order 11,12,13,22,23,33)
//   10       ln(conformal factor phi)
//   11       K0 (reference trace of the extrinsic curvature, static field)
//   12-17    traceless extrinsic curvature ~A_ij
//   18       K (trace of the extrinsic curvature)
//   19       Theta (projected Z4 vector component)
//   20-22    ^Ghat^i (evolved contracted Christoffel + 2 Z^i / phi^2)
//   23-25    b^i (shift driver auxiliary)
//   26-28    A_k = d_k ln(lapse)
//   29-31    psi^A_k   curl-cleaning vector for A_k
//   32       phi^A     divergence-cleaning scalar for psi^A
//   33-41    B_k^i = d_k beta^i                ([k][i], k-major)
//   42-50    psi^B ^i_k                        ([k][i], k-major)
//   51-53    phi^B ^i
//   54-71    D_kij = 1/2 d_k ~g_ij             (k-major, then sym ij)
//   72-89    psi^D_kij
//   90-95    phi^D_ij                          (sym ij)
//   96-98    P_k = d_k ln(phi)
//   99-101   psi^P_k
//   102      phi^P
//
// The optional advected matter variant appends tau as component 103.

namespace curlclean::fo {

inline constexpr int LNALPHA = 0;
inline constexpr int BETA = 1;     // +i
inline constexpr int GT = 4;       // +sym6
inline constexpr int LNPHI = 10;
inline constexpr int K0 = 11;
inline constexpr int AT = 12;      // +sym6
inline constexpr int K = 18;
inline constexpr int THETA = 19;
inline constexpr int GHAT = 20;    // +i
inline constexpr int BDRIVER = 23; // +i
inline constexpr int A = 26;       // +k
inline constexpr int PSIA = 29;    // +k
inline constexpr int PHIA = 32;
inline constexpr int B = 33;       // +3k+i
inline constexpr int PSIB = 42;    // +3k+i
inline constexpr int PHIB = 51;    // +i
inline constexpr int D = 54;       // +6k+sym6
inline constexpr int PSID = 72;    // +6k+sym6
inline constexpr int PHID = 90;    // +sym6
inline constexpr int P = 96;       // +k
inline constexpr int PSIP = 99;    // +k
inline constexpr int PHIP = 102;
inline constexpr int NVAR = 103;
inline constexpr int TAU = 103;    // only in the advected-matter variant

// True for the 44 auxiliary cleaning fields (psi vectors and phi scalars).
inline constexpr bool is_cleaning_component(int c) {
  return (c >= PSIA && c <= PHIA) || (c >= PSIB && c <= PHIB + 2) ||
         (c >= PSID && c <= PHID + 5) || (c >= PSIP && c <= PHIP);
}

inline constexpr int gt(int i, int j) { return GT + kSym6[i][j]; }
inline constexpr int at(int i, int j) { return AT + kSym6[i][j]; }
inline constexpr int bki(int k, int i) { return B + 3 * k + i; }
inline constexpr int psib(int k, int i) { return PSIB + 3 * k + i; }
inline constexpr int dk(int k, int i, int j) { return D + 6 * k + kSym6[i][j]; }
inline constexpr int psid(int k, int i, int j) { return PSID + 6 * k + kSym6[i][j]; }
inline constexpr int phid(int i, int j) { return PHID + kSym6[i][j]; }

}  // namespace curlclean::fo
