#pragma once
#include "curlclean/core/params.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// Compressible transport model (density, momentum, lattice vector J) whose J
// field carries a curl involution: curl J stays zero exactly in the continuum
// and the Maxwell-type companion pair (psi, phi) sweeps the discrete error
// away when cleaning is enabled.
class ToyHomogeneousSystem : public System {
 public:
  explicit ToyHomogeneousSystem(const ToyParams& par);

  const Layout& layout() const override { return *lay_; }
  void rhs_point(const PointContext& pc, const CompView& q,
                 const PointGradients& d, double* out) const override;
  double max_signal_speed(const FieldSnapshot& f) const override;
  void residual_point(const PointContext& pc, const CompView& q,
                      const PointGradients& d, double* out) const override;

  const ToyParams& params() const { return par_; }

 private:
  ToyParams par_;
  const Layout* lay_ = nullptr;
};

// Same model with a torsion source S_k feeding the J equation: curl J no
// longer vanishes but tracks the Burgers-type vector B, which gets its own
// divergence companion chi next to the (psi, phi) pair.
class ToyNonhomogeneousSystem : public System {
 public:
  explicit ToyNonhomogeneousSystem(const ToyParams& par);

  const Layout& layout() const override { return *lay_; }
  void rhs_point(const PointContext& pc, const CompView& q,
                 const PointGradients& d, double* out) const override;
  double max_signal_speed(const FieldSnapshot& f) const override;
  void residual_point(const PointContext& pc, const CompView& q,
                      const PointGradients& d, double* out) const override;

  const ToyParams& params() const { return par_; }

 private:
  ToyParams par_;
  const Layout* lay_ = nullptr;
};

}  // namespace curlclean
