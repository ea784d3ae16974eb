#pragma once
#include <functional>
#include <string>
#include <vector>

#include "curlclean/constraints/report.hpp"
#include "curlclean/core/field.hpp"
#include "curlclean/mol/stencil.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// Step-size policy: dt = cfl * h_min / v_max recomputed every step unless a
// fixed dt is forced.  The final step is clipped to land exactly on t_end.
struct TimeControl {
  double cfl = 0.25;
  double t_end = 1.0;
  double fixed_dt = 0;     // > 0 overrides the CFL estimate
  int monitor_every = 10;  // steps between constraint samples (0 = ends only)
};

// Method-of-lines driver: finite-difference gradients feed the pointwise RHS,
// classical fourth-order Runge-Kutta advances in time, and high-order
// dissipation is mixed into every stage.
class Integrator {
 public:
  Integrator(const System& sys, const GridSpec& grid, SpatialOps& ops,
             double sigma_ko);

  // One full RK4 step; throws NumericsError when a stage turns non-finite.
  void step(FieldSnapshot& f, double dt);

  // Writes the instantaneous RHS of f into out (out is resized).
  void rhs(const FieldSnapshot& f, std::vector<double>& out);

  double stable_dt(const FieldSnapshot& f, double cfl) const;

 private:
  const System& sys_;
  GridSpec grid_;
  SpatialOps& ops_;
  double sigma_ko_;
  std::vector<double> gx_, gy_, gz_;  // gradient planes, masked planes stay 0
  std::vector<double> acc_, kbuf_;
  FieldSnapshot stage_;
};

struct EvolveOptions {
  TimeControl time;
  double sigma_ko = 0.05;
  bool projection = false;        // re-enforce det ~g = 1 and tr ~A = 0
  double guard_limit = 1e6;       // Linf blow-up threshold for early stop
  long long max_steps = 2000000;  // hard safety cap
};

struct EvolveResult {
  std::vector<ConstraintReport> reports;
  bool diverged = false;
  std::string reason;
  long long steps = 0;
  double t_final = 0;
};

// Rescales the conformal metric to unit determinant and removes the trace of
// the conformal extrinsic curvature (first-order metric gradients are left
// untouched).  Only meaningful for the spacetime layouts.
void apply_projection(const System& sys, FieldSnapshot& f);

// Advances f to t_end, sampling constraints through `monitor` at step 0, every
// monitor_every steps, and at the end.  Stops early (diverged=true) on NaN,
// Linf overflow, or a NumericsError out of the RHS.  `on_step`, when given,
// fires after every completed step (snapshot writers hook in here).
EvolveResult evolve(
    const System& sys, FieldSnapshot& f, SpatialOps& ops,
    const EvolveOptions& opt,
    const std::function<ConstraintReport(const FieldSnapshot&)>& monitor,
    const std::function<void(const FieldSnapshot&, long long)>& on_step = {});

}  // namespace curlclean
