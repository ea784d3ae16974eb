#pragma once
#include <string>

#include "curlclean/core/field.hpp"

namespace curlclean {

// Binary initial-data container (see docs in README for the byte layout):
//   bytes 0-7   magic "CURLCLN1"
//   4 x u32 LE  version (currently 1), nx, ny, nz
//   u32 LE      component count
//   body        ncomp * nx*ny*nz float64 LE, component-major, x fastest
// For the spacetime layouts the body stores the physical lapse and conformal
// factor in the slots of their logarithms, so externally generated data can
// supply alpha and phi directly; save/load convert at the boundary.

struct LoadReport {
  double max_det_drift = 0.0;  // max |det ~g - 1| over the grid (spacetime only)
};

void save_initial_data(const std::string& path, const FieldSnapshot& f);

// Loads and validates: exact magic/version/dimension/count match, finite
// values everywhere, positive lapse and conformal factor (spacetime layouts).
// Violations throw DataError and no snapshot is produced.
FieldSnapshot load_initial_data(const std::string& path, const GridSpec& grid,
                                const Layout& lay, LoadReport* rep = nullptr);

}  // namespace curlclean
