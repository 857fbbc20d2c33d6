#pragma once

#include <cstdint>
#include <utility>

namespace bom::detail {

// splitmix64 finalizer; full avalanche on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based stream: a word is a pure function of (seed, sample, mode, slot),
// so draws are identical no matter which worker evaluates them.
inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t mode,
                                  std::uint64_t slot) {
  return mix64(mix64(mix64(mix64(seed) ^ sample) ^ mode) ^ slot);
}

inline double to_unit_interval(std::uint64_t x) {
  // (0, 1]: never zero, so the Box-Muller log below is always finite.
  return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

// Two independent standard normals from the keyed stream.
std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t sample, std::uint64_t mode);

}  // namespace bom::detail
