#pragma once

#include <cstdint>

namespace sdlab {

// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
// increment 0x9E3779B97F4A7C15; output is the state passed through the
// xor-shift-multiply finalizer (30/0xBF58476D1CE4E5B9, 27/0x94D049BB133111EB, 31).
// Every consumer in this library draws from this generator only, so the
// streams are reproducible in any language that implements the same mixer.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  constexpr double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by multiply-shift on the top 32 bits.
  // bound must be in [1, 2^32].
  constexpr std::uint64_t next_below(std::uint64_t bound) noexcept {
    return ((next() >> 32) * bound) >> 32;
  }

  constexpr bool next_bool() noexcept { return (next() >> 63) != 0; }

private:
  std::uint64_t state_;
};

} // namespace sdlab
