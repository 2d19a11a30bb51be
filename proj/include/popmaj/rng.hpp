#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace popmaj {

// Pseudo-random generation for every stochastic component of the toolkit.
//
// The generator is xoshiro256** (Blackman & Vigna, https://prng.di.unimi.it/),
// seeded through the splitmix64 finalizer. Both are pure 64-bit integer
// algorithms, so a given seed produces the same stream on every platform.
// Result files reference the stream under kRngAlgorithmId.

inline constexpr std::string_view kRngAlgorithmId =
    "xoshiro256starstar-1.0/splitmix64-seq";

namespace detail {

inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// Element `index` of the splitmix64 stream that starts at `seed`.
// Used as the documented (master seed, trial index) -> trial seed splitter.
inline constexpr std::uint64_t trial_seed(std::uint64_t master_seed,
                                          std::uint64_t index) {
  return detail::splitmix64_mix(master_seed +
                                (index + 1) * detail::kSplitmixGamma);
}

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed = 0) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += detail::kSplitmixGamma;
      word = detail::splitmix64_mix(x);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next() {
    const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  std::uint64_t operator()() { return next(); }

  // Unbiased draw from [0, bound) via Lemire's multiply-shift rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

 private:
  std::array<std::uint64_t, 4> state_{};
};

using Rng = Xoshiro256StarStar;

}  // namespace popmaj
