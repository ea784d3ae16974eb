#pragma once
#include <cstdint>

namespace curlclean {

// splitmix64 finalizer: the standard 64-bit avalanche mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based white noise in [-1, 1): a pure function of
// (seed, component, i, j, k), so the perturbation field is identical no
// matter how the grid is traversed or how many threads run.
inline double unit_noise(std::uint64_t seed, int comp, int i, int j, int k) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ std::uint64_t(comp));
  h = mix64(h ^ std::uint64_t(i));
  h = mix64(h ^ std::uint64_t(j));
  h = mix64(h ^ std::uint64_t(k));
  // 53 high bits -> [0,1), then map to [-1,1)
  return 2.0 * ((h >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace curlclean
