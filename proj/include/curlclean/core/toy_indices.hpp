#pragma once

// Component indices for the two demo systems and the induction system.

namespace curlclean::toy {
// homogeneous variant: 11 components
inline constexpr int RHO = 0;
inline constexpr int MOM = 1;   // +k, momentum density rho*v_k
inline constexpr int J = 4;     // +k, thermal impulse
inline constexpr int PSI = 7;   // +k, curl-cleaning vector
inline constexpr int PHI = 10;  // divergence-cleaning scalar
inline constexpr int NVAR_HOM = 11;
// non-homogeneous variant inserts the Burgers vector before the cleaning
// fields and appends a second cleaning scalar: 15 components
inline constexpr int BURG = 7;    // +k
inline constexpr int PSI_NH = 10; // +k
inline constexpr int PHI_NH = 13;
inline constexpr int CHI_NH = 14;
inline constexpr int NVAR_NONHOM = 15;
}  // namespace curlclean::toy

namespace curlclean::ind {
inline constexpr int E = 0;    // +k
inline constexpr int B = 3;    // +k
inline constexpr int PHI = 6;  // divergence-cleaning scalar
inline constexpr int NVAR = 7;
}  // namespace curlclean::ind
