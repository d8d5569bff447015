#pragma once

#include <cmath>
#include <cstdint>

namespace packest {

// Counter-based substream generator. Every (seed, stream label, counter)
// triple maps to a fixed value, so draws are independent of evaluation
// order and thread scheduling, and adding a new stream never shifts an
// existing one.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream purposes used by the pack simulator.
enum class Stream : std::uint64_t {
  kParamPerturb = 1,
  kVoltageNoise = 2,
  kTempNoise = 3,
  kProcessNoise = 4,
};

struct Substream {
  std::uint64_t key;

  Substream(std::uint64_t seed, Stream purpose, std::uint64_t cell)
      : key(splitmix64(splitmix64(seed ^ 0x5bd1e995u) ^
                       (static_cast<std::uint64_t>(purpose) << 32 | cell))) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(key ^ splitmix64(counter));
  }

  // Uniform in (0,1), never exactly 0 or 1.
  double uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform in [lo, hi].
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  // Standard normal via Box-Muller; draw index k consumes counters 2k, 2k+1.
  double normal(std::uint64_t k) const {
    const double u1 = uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
};

}  // namespace rng
}  // namespace packest
