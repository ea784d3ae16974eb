#pragma once
#include "curlclean/core/params.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// Maxwell induction pair (E, B) with hyperbolic divergence cleaning of B
// through the scalar phi.  div B is the involution; the curl-curl structure
// makes this the smallest useful check of the cleaning operators.
class InductionSystem : public System {
 public:
  explicit InductionSystem(const GLMParams& par);

  const Layout& layout() const override { return *lay_; }
  void rhs_point(const PointContext& pc, const CompView& q,
                 const PointGradients& d, double* out) const override;
  double max_signal_speed(const FieldSnapshot& f) const override;
  void residual_point(const PointContext& pc, const CompView& q,
                      const PointGradients& d, double* out) const override;

  const GLMParams& params() const { return par_; }

 private:
  GLMParams par_;
  const Layout* lay_ = nullptr;
};

}  // namespace curlclean
