#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "curlclean/core/grid.hpp"
#include "curlclean/core/layout.hpp"

namespace curlclean {

// Structure-of-arrays state: one contiguous block per component, components
// in layout order, x fastest within a component.  This is also the on-disk
// body order of the initial-data format.
struct FieldSnapshot {
  GridSpec grid;
  const Layout* layout = nullptr;
  double time = 0.0;
  std::vector<double> data;

  FieldSnapshot() = default;
  FieldSnapshot(const GridSpec& g, const Layout& lay)
      : grid(g), layout(&lay), data(lay.count * g.n(), 0.0) {
    grid.validate();
  }

  std::size_t n() const { return grid.n(); }
  double* comp(int c) { return data.data() + std::size_t(c) * n(); }
  const double* comp(int c) const { return data.data() + std::size_t(c) * n(); }
  double& at(int c, int i, int j, int k) { return comp(c)[grid.idx(i, j, k)]; }
  double at(int c, int i, int j, int k) const { return comp(c)[grid.idx(i, j, k)]; }
};

// Empty string when every entry is finite, otherwise a human-readable
// description of the first offender ("component At12 at (3,0,17): nan").
std::string first_nonfinite(const FieldSnapshot& f);

// Strided per-point read view into a structure-of-arrays block: v[c] is
// component c at the fixed grid point the view was built for.
struct CompView {
  const double* p = nullptr;  // base + point index
  std::size_t stride = 0;     // grid size
  double operator[](int c) const { return p[std::size_t(c) * stride]; }
};

}  // namespace curlclean
