#pragma once

#include <cstdint>
#include <limits>

namespace cyclegas {

/// SplitMix64: a 64-bit counter passed through a fixed mixing function.
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in the open interval (0, 1); safe to take the log of.
  constexpr double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Stream for cycle size s of replica r under a given seed. The starting
/// state is mix(mix(mix(seed) ^ r) ^ s), so streams are a pure function of
/// (seed, replica, s) and never depend on scheduling.
constexpr SplitMix64 cycle_stream(std::uint64_t seed, std::uint64_t replica, std::uint64_t s) noexcept {
  std::uint64_t key = SplitMix64::mix(seed + 0x9e3779b97f4a7c15ULL);
  key = SplitMix64::mix(key ^ (replica + 0x632be59bd9b4e019ULL));
  key = SplitMix64::mix(key ^ (s * 0xd1b54a32d192ed03ULL));
  return SplitMix64(key);
}

}  // namespace cyclegas
