#include "curlclean/systems/induction.hpp"

#include <algorithm>

#include "curlclean/core/toy_indices.hpp"

namespace curlclean {
namespace {
constexpr int kCl[3] = {1, 2, 0};
constexpr int kCm[3] = {2, 0, 1};
}  // namespace

InductionSystem::InductionSystem(const GLMParams& par) : par_(par) {
  lay_ = &layout_for(SystemKind::induction_glm);
  mask_.assign(lay_->count, 1);
  if (!par_.glm_enabled) mask_[ind::PHI] = 0;
  damp_ = mask_;
  fams_ = {{"divB", 1}};
}

void InductionSystem::rhs_point(const PointContext&, const CompView& q,
                                const PointGradients& d, double* out) const {
  using namespace ind;
  const double c2 = par_.c_light * par_.c_light;
  for (int k = 0; k < 3; ++k) {
    out[E + k] = c2 * (d(kCl[k], B + kCm[k]) - d(kCm[k], B + kCl[k]));
    double rb = -(d(kCl[k], E + kCm[k]) - d(kCm[k], E + kCl[k]));
    if (par_.glm_enabled) rb -= d(k, PHI);
    out[B + k] = rb;
  }
  out[PHI] = par_.glm_enabled
                 ? -par_.eps_d * q[PHI] -
                       par_.a_d * par_.a_d * (d(0, B) + d(1, B + 1) + d(2, B + 2))
                 : 0.0;
}

double InductionSystem::max_signal_speed(const FieldSnapshot&) const {
  double v = par_.c_light;
  if (par_.glm_enabled) v = std::max(v, par_.a_d);
  return v;
}

void InductionSystem::residual_point(const PointContext&, const CompView&,
                                     const PointGradients& d, double* out) const {
  out[0] = d(0, ind::B) + d(1, ind::B + 1) + d(2, ind::B + 2);
}

}  // namespace curlclean
