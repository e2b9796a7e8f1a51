#pragma once

#include <cstdint>

namespace walklab {

// Counter-based pseudo-random stream built on the splitmix64 mixing function.
// Streams are keyed by (seed, stream_id); independent trials of a Monte Carlo
// experiment each get their own stream, so results do not depend on thread
// scheduling. The identifier below is recorded in every output manifest.
inline constexpr const char* kRngId = "splitmix64-ctr";

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id) {
    // Two mixing rounds decorrelate (seed, stream) pairs that differ in one
    // coordinate only.
    state_ = splitmix64(splitmix64(seed) ^ (0x2545f4914f6cdd1dULL * (stream_id + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace walklab
