#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "randgrp/counting.hpp"

namespace randgrp {

// All randomness flows through std::mt19937_64, whose output sequence for a
// given seed is fixed by the C++ standard.  Library distributions are not
// portable across standard libraries, so the helpers below draw from raw
// generator output only.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stable derived seed: folds each key into the seed with mix64.
constexpr std::uint64_t subseed(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t k : keys) {
    h = mix64(h ^ mix64(k));
  }
  return h;
}

// Uniform integer in [0, n), n >= 1, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  std::uint64_t const threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) {
      return x % n;
    }
  }
}

// Uniform integer in [0, n), n >= 1, by rejection over msb(n)+1 random bits.
BigInt uniform_below(Rng& rng, BigInt const& n);

}  // namespace randgrp
