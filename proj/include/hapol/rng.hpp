#pragma once

#include <cstdint>

namespace hapol {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: the draws for sample `index` depend only on
/// (seed, index), so any sharding of indices reproduces the same values.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) noexcept
      : state_(mix64(seed ^ mix64(index + kGolden))) {}

  std::uint64_t next_u64() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double operator()() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

}  // namespace hapol
