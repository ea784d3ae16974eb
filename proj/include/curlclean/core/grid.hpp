#pragma once
#include <cstddef>
#include <string>

#include "curlclean/core/errors.hpp"

namespace curlclean {

enum class Boundary { periodic, extrapolate };

// Uniform cell-centered Cartesian box.  Cell (i,j,k) sits at
// min + (index + 1/2) * spacing along each axis; the flat index runs x
// fastest, then y, then z.  Coordinates are pure functions of these fields
// so every caller reconstructs them bit-exactly.
struct GridSpec {
  int nx = 1, ny = 1, nz = 1;
  double xmin = -0.5, xmax = 0.5;
  double ymin = -0.5, ymax = 0.5;
  double zmin = -0.5, zmax = 0.5;
  Boundary bx = Boundary::periodic;
  Boundary by = Boundary::periodic;
  Boundary bz = Boundary::periodic;

  double hx() const { return (xmax - xmin) / nx; }
  double hy() const { return (ymax - ymin) / ny; }
  double hz() const { return (zmax - zmin) / nz; }
  double x(int i) const { return xmin + (i + 0.5) * hx(); }
  double y(int j) const { return ymin + (j + 0.5) * hy(); }
  double z(int k) const { return zmin + (k + 0.5) * hz(); }

  std::size_t n() const {
    return std::size_t(nx) * std::size_t(ny) * std::size_t(nz);
  }
  std::size_t idx(int i, int j, int k) const {
    return (std::size_t(k) * ny + j) * std::size_t(nx) + i;
  }

  void validate() const {
    if (nx < 1 || ny < 1 || nz < 1)
      throw ConfigError("grid dimensions must be positive, got " +
                        std::to_string(nx) + "x" + std::to_string(ny) + "x" +
                        std::to_string(nz));
    if (!(xmax > xmin) || !(ymax > ymin) || !(zmax > zmin))
      throw ConfigError("grid bounds must satisfy max > min on every axis");
  }

  bool operator==(const GridSpec&) const = default;
};

}  // namespace curlclean
