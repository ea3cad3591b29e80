#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace cfmimo {

// splitmix64; used to derive independent sub-stream seeds from (seed, tags)
// so that results do not depend on evaluation order or thread schedule.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t s = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  s = splitmix64(s ^ d);
  return s;
}

// Stream tags keep sub-streams for different purposes disjoint.
enum class RngTag : std::uint64_t {
  kTopology = 1,
  kShadow = 2,
  kChannel = 3,
  kEstNoise = 4,
  kPositionNoise = 5,
  kSample = 6,
  kInit = 7,
  kDropout = 8,
  kShuffle = 9,
  kTest = 10,
};

/// Deterministic RNG stream. Gaussian variates use Box-Muller on top of the
/// raw 64-bit stream, so outputs are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng derive(std::uint64_t seed, RngTag tag, std::uint64_t a = 0, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    return Rng(mix_seed(seed, static_cast<std::uint64_t>(tag), a, b, c));
  }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal.
  double normal() {
    // u1 in (0,1] so the log is finite.
    double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Circularly symmetric complex normal with unit variance (E|z|^2 = 1).
  std::complex<double> cnormal() {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    return {normal() * inv_sqrt2, normal() * inv_sqrt2};
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cfmimo
