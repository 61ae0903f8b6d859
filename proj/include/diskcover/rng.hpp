#pragma once

#include <cstdint>
#include <random>

namespace diskcover {

// Name recorded in output metadata so runs can be reproduced across builds.
inline constexpr const char* kRngName = "mt19937_64+splitmix64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-replication seed from (master_seed, gamma index, phi index, rep index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t gi,
                                 std::uint64_t pi, std::uint64_t rep) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ gi);
  h = splitmix64(h ^ pi);
  h = splitmix64(h ^ rep);
  return h;
}

// Uniform double in [0,1) from the top 53 bits; mt19937_64 output is
// pinned by the standard, so streams are identical across platforms.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace diskcover
