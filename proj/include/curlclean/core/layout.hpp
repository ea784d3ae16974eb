#pragma once
#include <string>
#include <vector>

namespace curlclean {

enum class SystemKind {
  toy_homogeneous,     // density / momentum / thermal-impulse demo system
  toy_nonhomogeneous,  // same plus Burgers-vector source sector
  induction_glm,       // Maxwell-type induction pair with divergence cleaning
  foccz4,              // first-order CCZ4 Einstein evolution
};

// Canonical component ordering of a state vector.  The order is frozen: file
// formats, CSV column names and the index constants in fo_indices.hpp all
// depend on it.
struct Layout {
  SystemKind kind;
  int count = 0;
  // True for the variant that appends a passively advected energy-density
  // component after the relativity variables.
  bool has_tau = false;
  std::vector<std::string> names;

  // -1 when absent
  int index_of(const std::string& name) const;
};

const Layout& layout_for(SystemKind kind);

// foccz4 plus one trailing "tau" component (matter energy density carried on
// the grid and advected alongside the geometry).
const Layout& foccz4_tau_layout();

}  // namespace curlclean
