#pragma once
#include <cmath>
#include <string>

#include "curlclean/core/errors.hpp"

namespace curlclean {

// Canonical storage order for symmetric rank-2 objects:
// (11, 12, 13, 22, 23, 33).  Everything that packs a symmetric pair of
// indices (metric, extrinsic curvature, the ij legs of D_kij, ...) uses this
// one table so state layouts, file formats, and kernels agree.
inline constexpr int kSym6[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

struct Sym3 {
  double v[6] = {0, 0, 0, 0, 0, 0};

  double& operator()(int i, int j) { return v[kSym6[i][j]]; }
  double operator()(int i, int j) const { return v[kSym6[i][j]]; }
  double& operator[](int s) { return v[s]; }
  double operator[](int s) const { return v[s]; }

  static Sym3 identity() { return Sym3{{1, 0, 0, 1, 0, 1}}; }
};

// Fails loudly on input that is not actually symmetric; silent symmetrization
// would hide upstream index bugs.
inline Sym3 pack_sym3(const double m[3][3], double tol = 1e-12) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(m[i][j] - m[j][i]) > tol)
        throw NumericsError("pack_sym3: input asymmetric at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "): " + std::to_string(m[i][j]) + " vs " +
                            std::to_string(m[j][i]));
  Sym3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s(i, j) = 0.5 * (m[i][j] + m[j][i]);
  return s;
}

inline void unpack_sym3(const Sym3& s, double m[3][3]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s(i, j);
}

inline double det_sym3(const Sym3& g) {
  return g[0] * (g[3] * g[5] - g[4] * g[4]) -
         g[1] * (g[1] * g[5] - g[4] * g[2]) +
         g[2] * (g[1] * g[4] - g[3] * g[2]);
}

}  // namespace curlclean
