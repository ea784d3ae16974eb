#include "curlclean/mol/integrator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "curlclean/core/errors.hpp"
#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/sym3.hpp"

namespace curlclean {

namespace {

constexpr int kMaxComp = 128;  // stack RHS buffer, >= widest layout (104)

// First entry violating |v| <= limit (NaN included), described for the abort
// message; empty when the snapshot is within bounds.
std::string guard_scan(const FieldSnapshot& f, double limit) {
  const std::size_t n = f.n();
  const int nc = f.layout->count;
  for (int c = 0; c < nc; ++c) {
    const double* p = f.comp(c);
    for (std::size_t q = 0; q < n; ++q) {
      if (!(std::abs(p[q]) <= limit)) {
        const int i = int(q % f.grid.nx);
        const int j = int((q / f.grid.nx) % f.grid.ny);
        const int k = int(q / (std::size_t(f.grid.nx) * f.grid.ny));
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s = %.6g at cell (%d,%d,%d)",
                      f.layout->names[c].c_str(), p[q], i, j, k);
        return buf;
      }
    }
  }
  return {};
}

}  // namespace

Integrator::Integrator(const System& sys, const GridSpec& grid, SpatialOps& ops,
                       double sigma_ko)
    : sys_(sys), grid_(grid), ops_(ops), sigma_ko_(sigma_ko),
      stage_(grid, sys.layout()) {
  const std::size_t m = sys.layout().count * grid.n();
  // gradient planes of masked components are never written by the stencil
  // pass, so zeroing them once keeps every later read well defined
  gx_.assign(m, 0.0);
  gy_.assign(m, 0.0);
  gz_.assign(m, 0.0);
  acc_.assign(m, 0.0);
  kbuf_.assign(m, 0.0);
}

void Integrator::rhs(const FieldSnapshot& f, std::vector<double>& out) {
  const std::size_t n = grid_.n();
  const int nc = sys_.layout().count;
  out.resize(std::size_t(nc) * n);

  ops_.gradients(f, sys_.gradient_mask(), gx_, gy_, gz_);

  const double* base = f.data.data();
  const double* px = gx_.data();
  const double* py = gy_.data();
  const double* pz = gz_.data();
  double* po = out.data();
  const double t = f.time;

  ops_.pool().parallel_for(grid_.nz, [&](std::size_t k0, std::size_t k1) {
    double loc[kMaxComp];
    for (std::size_t k = k0; k < k1; ++k)
      for (int j = 0; j < grid_.ny; ++j) {
        std::size_t idx = (k * grid_.ny + j) * grid_.nx;
        for (int i = 0; i < grid_.nx; ++i, ++idx) {
          const PointContext pc{grid_.x(i), grid_.y(j), grid_.z(int(k)), t,
                                i,          j,          int(k)};
          const CompView q{base + idx, n};
          const PointGradients d{{px + idx, py + idx, pz + idx}, n};
          sys_.rhs_point(pc, q, d, loc);
          for (int c = 0; c < nc; ++c) po[std::size_t(c) * n + idx] = loc[c];
        }
      }
  });

  if (sigma_ko_ != 0.0)
    ops_.add_dissipation(f, sys_.damp_mask(), sigma_ko_, out);
}

void Integrator::step(FieldSnapshot& f, double dt) {
  const std::size_t m = f.data.size();
  const double* u = f.data.data();
  double* s = stage_.data.data();

  rhs(f, kbuf_);
  acc_ = kbuf_;
  for (std::size_t p = 0; p < m; ++p) s[p] = u[p] + 0.5 * dt * kbuf_[p];
  stage_.time = f.time + 0.5 * dt;

  rhs(stage_, kbuf_);
  for (std::size_t p = 0; p < m; ++p) {
    acc_[p] += 2.0 * kbuf_[p];
    s[p] = u[p] + 0.5 * dt * kbuf_[p];
  }

  rhs(stage_, kbuf_);
  for (std::size_t p = 0; p < m; ++p) {
    acc_[p] += 2.0 * kbuf_[p];
    s[p] = u[p] + dt * kbuf_[p];
  }
  stage_.time = f.time + dt;

  rhs(stage_, kbuf_);
  const double w = dt / 6.0;
  double* uu = f.data.data();
  for (std::size_t p = 0; p < m; ++p) uu[p] += w * (acc_[p] + kbuf_[p]);
  f.time += dt;
}

double Integrator::stable_dt(const FieldSnapshot& f, double cfl) const {
  double hmin = std::numeric_limits<double>::infinity();
  if (grid_.nx > 1) hmin = std::min(hmin, grid_.hx());
  if (grid_.ny > 1) hmin = std::min(hmin, grid_.hy());
  if (grid_.nz > 1) hmin = std::min(hmin, grid_.hz());
  if (!std::isfinite(hmin)) hmin = grid_.hx();  // fully degenerate grid

  const double vmax = sys_.max_signal_speed(f);
  if (!std::isfinite(vmax))
    throw NumericsError("signal speed estimate is not finite");
  double dt = std::numeric_limits<double>::infinity();
  if (vmax > 0.0) dt = cfl * hmin / vmax;
  // the damping operator alone contributes a real negative eigenvalue of up
  // to 3 sigma / h; cap the step so it stays inside the RK4 stability
  // interval even when no wave speed constrains it
  if (sigma_ko_ > 0.0) dt = std::min(dt, 0.8 * hmin / sigma_ko_);
  return dt;
}

void apply_projection(const System& sys, FieldSnapshot& f) {
  if (sys.layout().kind != SystemKind::foccz4) return;
  const std::size_t n = f.n();
  double* g[6];
  double* a[6];
  for (int s = 0; s < 6; ++s) {
    g[s] = f.comp(fo::GT + s);
    a[s] = f.comp(fo::AT + s);
  }
  for (std::size_t p = 0; p < n; ++p) {
    Sym3 gm, am;
    for (int s = 0; s < 6; ++s) {
      gm[s] = g[s][p];
      am[s] = a[s][p];
    }
    const double det = det_sym3(gm);
    if (!(det > 0))
      throw NumericsError("metric determinant went non-positive during "
                          "projection: det = " + std::to_string(det));
    const double sc = std::pow(det, -1.0 / 3.0);
    for (int s = 0; s < 6; ++s) gm[s] *= sc;
    Sym3 gi;
    invert_metric(gm, gi);  // det is 1 by construction
    const double tra = sym_dot(gi, am);
    for (int s = 0; s < 6; ++s) {
      g[s][p] = gm[s];
      a[s][p] = am[s] - (1.0 / 3.0) * tra * gm[s];
    }
  }
}

EvolveResult evolve(
    const System& sys, FieldSnapshot& f, SpatialOps& ops,
    const EvolveOptions& opt,
    const std::function<ConstraintReport(const FieldSnapshot&)>& monitor,
    const std::function<void(const FieldSnapshot&, long long)>& on_step) {
  EvolveResult res;
  Integrator integ(sys, f.grid, ops, opt.sigma_ko);
  const double t_end = opt.time.t_end;

  auto sample = [&]() {
    if (!monitor) return true;
    try {
      res.reports.push_back(monitor(f));
    } catch (const NumericsError& e) {
      res.diverged = true;
      res.reason = std::string("constraint evaluation failed: ") + e.what();
      return false;
    }
    return true;
  };

  if (!sample()) return res;

  const double t_tol = 1e-12 * std::max(1.0, std::abs(t_end));
  while (t_end - f.time > t_tol) {
    if (res.steps >= opt.max_steps) {
      res.reason = "step limit reached before t_end";
      break;
    }
    double dt;
    try {
      dt = opt.time.fixed_dt > 0 ? opt.time.fixed_dt
                                 : integ.stable_dt(f, opt.time.cfl);
    } catch (const NumericsError& e) {
      res.diverged = true;
      res.reason = e.what();
      break;
    }
    if (f.time + dt > t_end) dt = t_end - f.time;

    try {
      integ.step(f, dt);
      if (opt.projection) apply_projection(sys, f);
    } catch (const NumericsError& e) {
      res.diverged = true;
      res.reason = std::string(e.what()) + " (step " +
                   std::to_string(res.steps + 1) + ", t = " +
                   std::to_string(f.time) + ")";
      break;
    }
    ++res.steps;

    const std::string bad = guard_scan(f, opt.guard_limit);
    if (!bad.empty()) {
      res.diverged = true;
      res.reason = "solution left the trust region: " + bad + " (step " +
                   std::to_string(res.steps) + ", t = " +
                   std::to_string(f.time) + ")";
      break;
    }
    if (on_step) on_step(f, res.steps);

    const bool done = !(t_end - f.time > t_tol);
    if (!done && opt.time.monitor_every > 0 &&
        res.steps % opt.time.monitor_every == 0) {
      if (!sample()) break;
    }
  }

  if (!res.diverged &&
      (res.reports.empty() || res.reports.back().t != f.time)) {
    sample();
  }
  res.t_final = f.time;
  return res;
}

}  // namespace curlclean
