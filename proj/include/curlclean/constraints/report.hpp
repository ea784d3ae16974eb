#pragma once
#include <string>
#include <vector>

namespace curlclean {

// Grid norms of one residual family (all components of the family folded in:
// L1 and L2 accumulate across components, Linf takes the overall max).
struct FamilyNorms {
  std::string name;
  double l1 = 0;
  double l2 = 0;
  double linf = 0;
};

// One monitoring sample: every residual family of the active system at time t.
struct ConstraintReport {
  double t = 0;
  std::vector<FamilyNorms> families;

  const FamilyNorms* find(const std::string& name) const {
    for (const auto& f : families)
      if (f.name == name) return &f;
    return nullptr;
  }
};

}  // namespace curlclean
