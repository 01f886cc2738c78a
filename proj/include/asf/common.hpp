#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asf {

// Lattice and Weyl-group coordinates. Bounded by construction at supported
// ranks, so a machine integer is enough; rationals are arbitrary precision.
using Int = long long;

// Thrown when a truncated-window computation cannot guarantee its result.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& m) : std::runtime_error(m) {}
};

// Bad user-facing input (CLI arguments, malformed encodings).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed; used to split RNG state per task so
// results do not depend on scheduling.
inline std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t v) {
  std::uint64_t s = seed ^ (v * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL);
  return splitmix64(s);
}

}  // namespace asf
