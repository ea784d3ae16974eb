#include "curlclean/core/field.hpp"

#include <cmath>

namespace curlclean {

std::string first_nonfinite(const FieldSnapshot& f) {
  const std::size_t n = f.n();
  for (int c = 0; c < f.layout->count; ++c) {
    const double* p = f.comp(c);
    for (std::size_t m = 0; m < n; ++m) {
      if (!std::isfinite(p[m])) {
        const int i = int(m % f.grid.nx);
        const int j = int((m / f.grid.nx) % f.grid.ny);
        const int k = int(m / (std::size_t(f.grid.nx) * f.grid.ny));
        return "component " + f.layout->names[c] + " at (" + std::to_string(i) +
               "," + std::to_string(j) + "," + std::to_string(k) +
               "): " + std::to_string(p[m]);
      }
    }
  }
  return {};
}

}  // namespace curlclean
