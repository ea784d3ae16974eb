#include "curlclean/core/layout.hpp"

#include <algorithm>

#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/toy_indices.hpp"

namespace curlclean {
namespace {

const char* kSymSuffix[6] = {"11", "12", "13", "22", "23", "33"};

void push_vec(std::vector<std::string>& v, const std::string& base) {
  for (int k = 1; k <= 3; ++k) v.push_back(base + std::to_string(k));
}
void push_sym(std::vector<std::string>& v, const std::string& base) {
  for (int s = 0; s < 6; ++s) v.push_back(base + kSymSuffix[s]);
}
void push_mat(std::vector<std::string>& v, const std::string& base) {
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 3; ++i)
      v.push_back(base + std::to_string(k) + std::to_string(i));
}
void push_vecsym(std::vector<std::string>& v, const std::string& base) {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s < 6; ++s)
      v.push_back(base + std::to_string(k) + kSymSuffix[s]);
}

Layout make_foccz4(bool with_tau) {
  Layout lay;
  lay.kind = SystemKind::foccz4;
  lay.has_tau = with_tau;
  auto& n = lay.names;
  n.push_back("lnalpha");
  push_vec(n, "beta");
  push_sym(n, "gt");
  n.push_back("lnphi");
  n.push_back("K0");
  push_sym(n, "At");
  n.push_back("K");
  n.push_back("Theta");
  push_vec(n, "Ghat");
  push_vec(n, "b");
  push_vec(n, "A");
  push_vec(n, "psiA");
  n.push_back("phiA");
  push_mat(n, "B");
  push_mat(n, "psiB");
  push_vec(n, "phiB");
  push_vecsym(n, "D");
  push_vecsym(n, "psiD");
  push_sym(n, "phiD");
  push_vec(n, "P");
  push_vec(n, "psiP");
  n.push_back("phiP");
  if (with_tau) n.push_back("tau");
  lay.count = int(n.size());
  return lay;
}

Layout make_toy(bool nonhom) {
  Layout lay;
  lay.kind = nonhom ? SystemKind::toy_nonhomogeneous : SystemKind::toy_homogeneous;
  auto& n = lay.names;
  n.push_back("rho");
  push_vec(n, "mom");
  push_vec(n, "J");
  if (nonhom) push_vec(n, "B");
  push_vec(n, "psi");
  n.push_back("phi");
  if (nonhom) n.push_back("chi");
  lay.count = int(n.size());
  return lay;
}

Layout make_induction() {
  Layout lay;
  lay.kind = SystemKind::induction_glm;
  push_vec(lay.names, "E");
  push_vec(lay.names, "B");
  lay.names.push_back("phi");
  lay.count = int(lay.names.size());
  return lay;
}

}  // namespace

int Layout::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : int(it - names.begin());
}

const Layout& layout_for(SystemKind kind) {
  static const Layout toy_hom = make_toy(false);
  static const Layout toy_nonhom = make_toy(true);
  static const Layout induction = make_induction();
  static const Layout ccz4 = make_foccz4(false);
  switch (kind) {
    case SystemKind::toy_homogeneous: return toy_hom;
    case SystemKind::toy_nonhomogeneous: return toy_nonhom;
    case SystemKind::induction_glm: return induction;
    case SystemKind::foccz4: return ccz4;
  }
  return ccz4;  // unreachable
}

const Layout& foccz4_tau_layout() {
  static const Layout lay = make_foccz4(true);
  return lay;
}

}  // namespace curlclean
