#pragma once

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace altlab {

/// splitmix64 finalizer; used to derive independent per-task seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seeded generator with platform-stable draws (boost distributions are
/// fully specified, unlike the std ones).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

  long long uniform(long long lo, long long hi) {
    return boost::random::uniform_int_distribution<long long>(lo, hi)(engine_);
  }
  /// Uniform in [lo, hi] \ {0}.
  long long nonzero(long long lo, long long hi) {
    for (;;)
      if (long long v = uniform(lo, hi); v != 0) return v;
  }

 private:
  boost::random::mt19937_64 engine_;
};

}  // namespace altlab
