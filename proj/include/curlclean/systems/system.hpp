#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "curlclean/core/field.hpp"
#include "curlclean/core/layout.hpp"
#include "curlclean/curvature/geometry.hpp"

// A System supplies the pointwise right-hand side q_t = F(q, grad q, x, t) of
// a first-order hyperbolic evolution, the characteristic speed bound the time
// step is computed from, and the constraint residuals monitored alongside the
// run.  The spatial discretization lives elsewhere: every hook here sees only
// the local state and already-formed gradients.

namespace curlclean {

struct PointContext {
  double x = 0, y = 0, z = 0, t = 0;
  int i = 0, j = 0, k = 0;
};

// One monitored constraint family (e.g. the Hamiltonian constraint, or the
// three components of a curl involution reported as a single family).
struct ResidualFamily {
  std::string name;
  int count = 1;
};

class System {
 public:
  virtual ~System() = default;

  virtual const Layout& layout() const = 0;

  // mask[c] == 0: the RHS never reads the gradient of component c, so the
  // stencil work for it can be skipped (its gradient planes stay zero).
  const std::vector<std::uint8_t>& gradient_mask() const { return mask_; }

  // mask[c] == 0: component c gets no artificial damping (frozen fields and
  // fields pinned to zero when cleaning is off).
  const std::vector<std::uint8_t>& damp_mask() const { return damp_; }

  virtual void rhs_point(const PointContext& pc, const CompView& q,
                         const PointGradients& d, double* out) const = 0;

  // Upper bound on the largest signal speed anywhere in the snapshot.
  virtual double max_signal_speed(const FieldSnapshot& f) const = 0;

  // Monitored families, in report order; residual_point fills their
  // components contiguously in the same order.
  const std::vector<ResidualFamily>& residual_families() const { return fams_; }
  int residual_count() const {
    int t = 0;
    for (const auto& f : fams_) t += f.count;
    return t;
  }
  virtual void residual_point(const PointContext& pc, const CompView& q,
                              const PointGradients& d, double* out) const = 0;

 protected:
  std::vector<std::uint8_t> mask_;   // gradient mask
  std::vector<std::uint8_t> damp_;   // damping mask
  std::vector<ResidualFamily> fams_;
};

}  // namespace curlclean
