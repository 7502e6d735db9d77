#pragma once

#include <cstdint>

namespace bipspar {

// SplitMix64 finalizer. Statistically strong mixing for counter-based use.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stateless hash of (seed, a, b). Every randomized decision in the library is
// keyed through this, so results are independent of evaluation order.
inline std::uint64_t hash3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = mix64(seed ^ 0x2545f4914f6cdd1dULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  return h;
}

// Uniform double in [0, 1) from the top 53 bits of hash3.
inline double hash_unit(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return static_cast<double>(hash3(seed, a, b) >> 11) * 0x1.0p-53;
}

}  // namespace bipspar
