#pragma once
#include <vector>

#include "curlclean/constraints/report.hpp"
#include "curlclean/core/field.hpp"
#include "curlclean/mol/stencil.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// Evaluates the residual families of a system over a snapshot and reduces
// them to grid norms:
//   L1   = h^3 sum |r|         L2 = sqrt(h^3 sum r^2)      Linf = max |r|
// with h^3 = hx hy hz, summing over interior points and over every component
// of a family.  Interior means all points on periodic axes and everything but
// the two outermost layers on extrapolated axes.  Reductions are kept in
// per-plane partials combined in plane order, so the result is bit-identical
// for any worker count.
class Monitors {
 public:
  Monitors(const System& sys, const GridSpec& grid, ThreadPool& pool);

  ConstraintReport evaluate(const FieldSnapshot& f);

 private:
  const System& sys_;
  GridSpec grid_;
  SpatialOps ops_;
  std::vector<double> gx_, gy_, gz_;
};

}  // namespace curlclean
