#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

namespace qboost {

// Deterministic 64-bit generator with a fixed, portable algorithm:
// xoshiro256++ (Blackman & Vigna, public domain), state seeded by
// splitmix64. Identical seeds produce identical streams on every
// platform and are easy to reproduce in other languages, which the
// cross-implementation distribution checks rely on.
//
// Derived quantities are pinned too:
//   next_double():  (next_u64() >> 11) * 2^-53, uniform in [0, 1)
//   next_index(n):  mask-and-reject on the low bits, uniform in [0, n)
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection on a power-of-two mask keeps the
  // draw unbiased and trivially portable.
  std::size_t next_index(std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    while (true) {
      const std::uint64_t v = next_u64() & mask;
      if (v < n) return static_cast<std::size_t>(v);
    }
  }

  // splitmix64 step; also used on its own to mix seeds for derived streams.
  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Deterministic per-purpose seed: mix(seed, tag) so that independent
  // consumers (split, trainer, ...) never share a stream.
  static std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull * (tag + 1));
    return splitmix64(s);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace qboost
