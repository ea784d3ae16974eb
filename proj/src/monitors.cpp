#include "curlclean/constraints/monitors.hpp"

#include <algorithm>
#include <cmath>

namespace curlclean {

namespace {
constexpr int kMaxResidual = 64;  // stack buffer, >= widest residual set (48)
}

Monitors::Monitors(const System& sys, const GridSpec& grid, ThreadPool& pool)
    : sys_(sys), grid_(grid), ops_(grid, pool) {
  const std::size_t m = sys.layout().count * grid.n();
  gx_.assign(m, 0.0);
  gy_.assign(m, 0.0);
  gz_.assign(m, 0.0);
}

ConstraintReport Monitors::evaluate(const FieldSnapshot& f) {
  ops_.gradients(f, sys_.gradient_mask(), gx_, gy_, gz_);

  const auto& fams = sys_.residual_families();
  const int nf = int(fams.size());
  std::vector<int> off(nf + 1, 0);
  for (int a = 0; a < nf; ++a) off[a + 1] = off[a] + fams[a].count;

  const auto lo = [](Boundary b, int n) {
    return (b == Boundary::extrapolate && n > 1) ? 2 : 0;
  };
  const int i0 = lo(grid_.bx, grid_.nx), i1 = grid_.nx - i0;
  const int j0 = lo(grid_.by, grid_.ny), j1 = grid_.ny - j0;
  const int k0 = lo(grid_.bz, grid_.nz), k1 = grid_.nz - k0;
  const int nplanes = k1 - k0;

  // per-plane partials: [plane][family][{sum|r|, sum r^2, max|r|}]
  std::vector<double> part(std::size_t(nplanes) * nf * 3, 0.0);

  const std::size_t n = grid_.n();
  const double* base = f.data.data();
  const double* px = gx_.data();
  const double* py = gy_.data();
  const double* pz = gz_.data();
  const double t = f.time;

  ops_.pool().parallel_for(nplanes, [&](std::int64_t p0, std::int64_t p1) {
    double loc[kMaxResidual];
    for (std::int64_t pk = p0; pk < p1; ++pk) {
      const int k = k0 + int(pk);
      double* acc = part.data() + std::size_t(pk) * nf * 3;
      for (int j = j0; j < j1; ++j) {
        std::size_t idx = (std::size_t(k) * grid_.ny + j) * grid_.nx + i0;
        for (int i = i0; i < i1; ++i, ++idx) {
          const PointContext pc{grid_.x(i), grid_.y(j), grid_.z(k), t, i, j, k};
          const CompView q{base + idx, n};
          const PointGradients d{{px + idx, py + idx, pz + idx}, n};
          sys_.residual_point(pc, q, d, loc);
          for (int a = 0; a < nf; ++a) {
            double sa = 0, sq = 0, mx = 0;
            for (int c = off[a]; c < off[a + 1]; ++c) {
              const double r = std::abs(loc[c]);
              sa += r;
              sq += loc[c] * loc[c];
              mx = std::max(mx, r);
            }
            acc[3 * a] += sa;
            acc[3 * a + 1] += sq;
            acc[3 * a + 2] = std::max(acc[3 * a + 2], mx);
          }
        }
      }
    }
  });

  const double h3 = grid_.hx() * grid_.hy() * grid_.hz();
  ConstraintReport rep;
  rep.t = f.time;
  rep.families.resize(nf);
  for (int a = 0; a < nf; ++a) {
    double sa = 0, sq = 0, mx = 0;
    for (int pk = 0; pk < nplanes; ++pk) {
      const double* acc = part.data() + std::size_t(pk) * nf * 3;
      sa += acc[3 * a];
      sq += acc[3 * a + 1];
      mx = std::max(mx, acc[3 * a + 2]);
    }
    rep.families[a] = {fams[a].name, h3 * sa, std::sqrt(h3 * sq), mx};
  }
  return rep;
}

}  // namespace curlclean
