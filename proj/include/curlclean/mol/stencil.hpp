#pragma once
#include <cstdint>
#include <vector>

#include "curlclean/core/field.hpp"
#include "curlclean/mol/thread_pool.hpp"

// Fourth-order finite-difference first derivatives and sixth-difference
// Kreiss-Oliger damping on the uniform grid.  Periodic axes wrap; extrapolate
// axes switch to shifted one-sided stencils of the same order at the two
// outermost layers (and skip damping where the centered seven-point stencil
// would leave the grid).  Axes of extent 1 are treated as invariant
// directions: derivatives along them are zero.

namespace curlclean {

class SpatialOps {
 public:
  SpatialOps(const GridSpec& g, ThreadPool& pool);

  // d/dx, d/dy, d/dz of every component with mask[c] != 0 into gx/gy/gz,
  // which use the same component-major layout as the snapshot.  Masked-out
  // components are left untouched (callers keep those planes zeroed).
  void gradients(const FieldSnapshot& f, const std::vector<std::uint8_t>& mask,
                 std::vector<double>& gx, std::vector<double>& gy,
                 std::vector<double>& gz) const;

  // acc += sigma/(64 h) * (1,-6,15,-20,15,-6,1)-difference along each axis,
  // for every component with mask[c] != 0.
  void add_dissipation(const FieldSnapshot& f,
                       const std::vector<std::uint8_t>& mask, double sigma,
                       std::vector<double>& acc) const;

  ThreadPool& pool() const { return *pool_; }

 private:
  GridSpec g_;
  ThreadPool* pool_;
};

}  // namespace curlclean
