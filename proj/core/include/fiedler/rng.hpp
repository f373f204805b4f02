#pragma once

#include <cstdint>

namespace fiedler {

// SplitMix64. Fixed, platform-independent stream so seeded generators are
// reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound): reject draws below 2^64 mod bound, then
  // reduce. Integer arithmetic only.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = next();
    while (r < threshold) r = next();
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent seed for the k-th item of a seeded batch.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  SplitMix64 a(seed ^ (k * 0xd1b54a32d192ed03ULL));
  a.next();
  return a.next() ^ k;
}

}  // namespace fiedler
