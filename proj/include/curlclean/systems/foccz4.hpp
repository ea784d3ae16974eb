#pragma once
#include "curlclean/core/params.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// External stress-energy entering the evolution equations: energy density
// tau, momentum density S_i and stress S_ij.
struct MatterRecord {
  double tau = 0;
  double S[3] = {0, 0, 0};
  double Sij[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
};

// Rigid rotation velocity field v = omega x r inside r_cut, tapered to zero
// over a smoothstep of width `smooth` so the advection stays differentiable.
struct RigidRotation {
  double omega[3] = {0, 0, 0.2};
  double r_cut = 5.0;
  double smooth = 2.0;
  void velocity(double x, double y, double z, double v[3]) const;
};

// First-order CCZ4 evolution of the Einstein equations with curl cleaning on
// the auxiliary fields A_k, P_k, B_k^i and D_kij.  Optionally carries one
// extra component: an energy density advected by a prescribed rigid rotation
// (the slowly rotating source configuration).
class FOCCZ4System : public System {
 public:
  explicit FOCCZ4System(const CCZ4Params& par);
  FOCCZ4System(const CCZ4Params& par, const RigidRotation& rot);

  const Layout& layout() const override { return *lay_; }
  void rhs_point(const PointContext& pc, const CompView& q,
                 const PointGradients& d, double* out) const override;
  double max_signal_speed(const FieldSnapshot& f) const override;
  void residual_point(const PointContext& pc, const CompView& q,
                      const PointGradients& d, double* out) const override;

  // Hamiltonian and momentum constraints alone (diagnostics and tests).
  void adm_point(const CompView& q, const PointGradients& d,
                 const MatterRecord& mat, double* H, double M[3]) const;

  // Same right-hand side with an explicit stress-energy record; the regular
  // entry point builds the record from the advected energy channel.
  void rhs_with_matter(const CompView& q, const PointGradients& d,
                       const MatterRecord& mat, double* out) const;

  const CCZ4Params& params() const { return par_; }
  bool advects_tau() const { return has_tau_; }
  const RigidRotation& rotation() const { return rot_; }

 private:
  void fill_mask();

  CCZ4Params par_;
  bool has_tau_ = false;
  RigidRotation rot_;
  const Layout* lay_ = nullptr;
};

}  // namespace curlclean
