#include "curlclean/mol/stencil.hpp"

#include <cstddef>

namespace curlclean {
namespace {

// First derivative along one line of n points with element stride s,
// scaled by i12h = 1/(12h).  The bulk loop is duplicated for unit stride so
// the compiler can vectorize the x-direction sweep.
void d1_line(const double* u, double* out, int n, std::ptrdiff_t s, double i12h,
             bool periodic) {
  auto U = [&](int i) { return u[std::ptrdiff_t(i) * s]; };
  auto O = [&](int i) -> double& { return out[std::ptrdiff_t(i) * s]; };
  if (periodic) {
    for (int i = 0; i < 2; ++i)
      O(i) = i12h * (U((i - 2 + n) % n) - 8.0 * U((i - 1 + n) % n) +
                     8.0 * U((i + 1) % n) - U((i + 2) % n));
    for (int i = n - 2; i < n; ++i)
      O(i) = i12h * (U((i - 2 + n) % n) - 8.0 * U((i - 1 + n) % n) +
                     8.0 * U((i + 1) % n) - U((i + 2) % n));
  } else {
    O(0) = i12h * (-25.0 * U(0) + 48.0 * U(1) - 36.0 * U(2) + 16.0 * U(3) -
                   3.0 * U(4));
    O(1) = i12h * (-3.0 * U(0) - 10.0 * U(1) + 18.0 * U(2) - 6.0 * U(3) + U(4));
    O(n - 2) = i12h * (3.0 * U(n - 1) + 10.0 * U(n - 2) - 18.0 * U(n - 3) +
                       6.0 * U(n - 4) - U(n - 5));
    O(n - 1) = i12h * (25.0 * U(n - 1) - 48.0 * U(n - 2) + 36.0 * U(n - 3) -
                       16.0 * U(n - 4) + 3.0 * U(n - 5));
  }
  if (s == 1) {
    for (int i = 2; i < n - 2; ++i)
      out[i] = i12h * (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]);
  } else {
    for (int i = 2; i < n - 2; ++i)
      O(i) = i12h * (U(i - 2) - 8.0 * U(i - 1) + 8.0 * U(i + 1) - U(i + 2));
  }
}

// Sixth-difference damping along one line, accumulated with weight w.  Wraps
// are confined to the three points at each end; the bulk runs index-free.
void ko_line(const double* u, double* acc, int n, std::ptrdiff_t s, double w,
             bool periodic) {
  auto U = [&](int i) { return u[std::ptrdiff_t(i) * s]; };
  auto A = [&](int i) -> double& { return acc[std::ptrdiff_t(i) * s]; };
  auto wrap = [&](int i) {
    const int m3 = (i - 3 + n) % n, m2 = (i - 2 + n) % n, m1 = (i - 1 + n) % n;
    const int p1 = (i + 1) % n, p2 = (i + 2) % n, p3 = (i + 3) % n;
    A(i) += w * (U(m3) - 6.0 * U(m2) + 15.0 * U(m1) - 20.0 * U(i) +
                 15.0 * U(p1) - 6.0 * U(p2) + U(p3));
  };
  if (periodic) {
    if (n < 7) {  // edge ranges would overlap; wrap every point
      for (int i = 0; i < n; ++i) wrap(i);
      return;
    }
    for (int i = 0; i < 3; ++i) wrap(i);
    for (int i = n - 3; i < n; ++i) wrap(i);
  }
  if (s == 1) {
    for (int i = 3; i < n - 3; ++i)
      acc[i] += w * (u[i - 3] - 6.0 * u[i - 2] + 15.0 * u[i - 1] -
                     20.0 * u[i] + 15.0 * u[i + 1] - 6.0 * u[i + 2] +
                     u[i + 3]);
  } else {
    for (int i = 3; i < n - 3; ++i)
      A(i) += w * (U(i - 3) - 6.0 * U(i - 2) + 15.0 * U(i - 1) - 20.0 * U(i) +
                   15.0 * U(i + 1) - 6.0 * U(i + 2) + U(i + 3));
  }
}

void check_axis(int n, char axis) {
  if (n != 1 && n < 5)
    throw ConfigError(std::string("axis ") + axis + " has extent " +
                      std::to_string(n) +
                      "; differentiated axes need at least 5 points");
}

}  // namespace

SpatialOps::SpatialOps(const GridSpec& g, ThreadPool& pool) : g_(g), pool_(&pool) {
  check_axis(g_.nx, 'x');
  check_axis(g_.ny, 'y');
  check_axis(g_.nz, 'z');
}

void SpatialOps::gradients(const FieldSnapshot& f,
                           const std::vector<std::uint8_t>& mask,
                           std::vector<double>& gx, std::vector<double>& gy,
                           std::vector<double>& gz) const {
  const std::size_t n = f.n();
  const int nc = f.layout->count;
  gx.resize(std::size_t(nc) * n);
  gy.resize(std::size_t(nc) * n);
  gz.resize(std::size_t(nc) * n);

  const int nx = g_.nx, ny = g_.ny, nz = g_.nz;
  const std::size_t plane = std::size_t(nx) * ny;
  const double ix = 1.0 / (12.0 * g_.hx());
  const double iy = 1.0 / (12.0 * g_.hy());
  const double iz = 1.0 / (12.0 * g_.hz());
  const bool px = g_.bx == Boundary::periodic;
  const bool py = g_.by == Boundary::periodic;
  const bool pz = g_.bz == Boundary::periodic;

  std::vector<int> comps;
  for (int c = 0; c < nc; ++c)
    if (mask[c]) comps.push_back(c);

  pool_->parallel_for(comps.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const int c = comps[ci];
      const double* u = f.comp(c);
      double* ox = gx.data() + std::size_t(c) * n;
      double* oy = gy.data() + std::size_t(c) * n;
      double* oz = gz.data() + std::size_t(c) * n;
      if (nx > 1)
        for (int k = 0; k < nz; ++k)
          for (int j = 0; j < ny; ++j) {
            const std::size_t off = k * plane + std::size_t(j) * nx;
            d1_line(u + off, ox + off, nx, 1, ix, px);
          }
      else
        for (std::size_t p = 0; p < n; ++p) ox[p] = 0.0;
      if (ny > 1)
        for (int k = 0; k < nz; ++k)
          for (int i = 0; i < nx; ++i) {
            const std::size_t off = k * plane + std::size_t(i);
            d1_line(u + off, oy + off, ny, nx, iy, py);
          }
      else
        for (std::size_t p = 0; p < n; ++p) oy[p] = 0.0;
      if (nz > 1)
        for (int j = 0; j < ny; ++j)
          for (int i = 0; i < nx; ++i) {
            const std::size_t off = std::size_t(j) * nx + i;
            d1_line(u + off, oz + off, nz, std::ptrdiff_t(plane), iz, pz);
          }
      else
        for (std::size_t p = 0; p < n; ++p) oz[p] = 0.0;
    }
  });
}

void SpatialOps::add_dissipation(const FieldSnapshot& f,
                                 const std::vector<std::uint8_t>& mask,
                                 double sigma, std::vector<double>& acc) const {
  if (sigma == 0.0) return;
  const std::size_t n = f.n();
  const int nc = f.layout->count;
  const int nx = g_.nx, ny = g_.ny, nz = g_.nz;
  const std::size_t plane = std::size_t(nx) * ny;
  const double wx = sigma / (64.0 * g_.hx());
  const double wy = sigma / (64.0 * g_.hy());
  const double wz = sigma / (64.0 * g_.hz());
  const bool px = g_.bx == Boundary::periodic;
  const bool py = g_.by == Boundary::periodic;
  const bool pz = g_.bz == Boundary::periodic;

  std::vector<int> comps;
  for (int c = 0; c < nc; ++c)
    if (mask[c]) comps.push_back(c);

  pool_->parallel_for(comps.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t ci = b; ci < e; ++ci) {
      const int c = comps[ci];
      const double* u = f.comp(c);
      double* a = acc.data() + std::size_t(c) * n;
      if (nx > 1)
        for (int k = 0; k < nz; ++k)
          for (int j = 0; j < ny; ++j) {
            const std::size_t off = k * plane + std::size_t(j) * nx;
            ko_line(u + off, a + off, nx, 1, wx, px);
          }
      if (ny > 1)
        for (int k = 0; k < nz; ++k)
          for (int i = 0; i < nx; ++i) {
            const std::size_t off = k * plane + std::size_t(i);
            ko_line(u + off, a + off, ny, nx, wy, py);
          }
      if (nz > 1)
        for (int j = 0; j < ny; ++j)
          for (int i = 0; i < nx; ++i) {
            const std::size_t off = std::size_t(j) * nx + i;
            ko_line(u + off, a + off, nz, std::ptrdiff_t(plane), wz, pz);
          }
    }
  });
}

}  // namespace curlclean
