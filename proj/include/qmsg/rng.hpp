#pragma once

#include <cstdint>

namespace qmsg::rng {

// Counter-based generator: word(seed, counter) applies the SplitMix64
// finalizer to seed + (counter + 1) * golden-gamma. Each (seed, counter)
// pair maps to one fixed 64-bit word, with no sequential state, so trial t
// always sees the same randomness no matter how trials are scheduled over
// threads. Histograms are therefore bit-reproducible for a given seed.
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t word(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * kGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of word().
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(word(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace qmsg::rng
