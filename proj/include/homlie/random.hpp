#pragma once

#include <cstdint>

namespace homlie {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent key for sub-stream `index` of `key`.
constexpr std::uint64_t split_key(std::uint64_t key, std::uint64_t index) noexcept {
  return mix64(key ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Counter-based stream: the i-th draw is a pure function of (key, i), so any
/// slot of any experiment can be regenerated without replaying the others.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t next() noexcept { return mix64(key_ + 0xd1b54a32d192ed03ULL * ++counter_); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x <= limit) return x % bound;
    }
  }

  /// Uniform integer in [-bound, bound].
  constexpr std::int64_t symmetric(std::uint64_t bound) noexcept {
    return static_cast<std::int64_t>(below(2 * bound + 1)) - static_cast<std::int64_t>(bound);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace homlie
