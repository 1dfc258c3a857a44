#ifndef SEAWEED_PRNG_HPP
#define SEAWEED_PRNG_HPP

#include <cstdint>

namespace seaweed {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines so that seeded output is identical across standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [-bound, bound].
  long symmetric(long bound) {
    return static_cast<long>(next() % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }

  /// Uniform in [-bound, bound] \ {0}.
  long symmetric_nonzero(long bound) {
    for (;;) {
      long v = symmetric(bound);
      if (v != 0) return v;
    }
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

/// Stable seed derivation for independent streams (pairs, trials, workers).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x9e3779b97f4a7c15ULL + (b << 1)));
  g.next();
  return g.next();
}

} // namespace seaweed

#endif
