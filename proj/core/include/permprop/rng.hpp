#ifndef PERMPROP_RNG_HPP
#define PERMPROP_RNG_HPP

#include <cstdint>

namespace permprop {

/// SplitMix64 finalizer (Vigna's public-domain mix function).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// SplitMix64: counter-based 64-bit generator with identical output for a
/// given seed on every platform (plain uint64 arithmetic, no library
/// distributions anywhere).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform draw from [0, bound) by Lemire's multiply-shift rejection;
  /// unbiased for any bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Substream for one chunk of work: state seeded by hashing (seed, chunk)
/// so chunks can be processed by any worker in any order.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t chunk) {
  return SplitMix64(mix64(mix64(seed) + chunk * 0x9e3779b97f4a7c15ULL));
}

}  // namespace permprop

#endif  // PERMPROP_RNG_HPP
