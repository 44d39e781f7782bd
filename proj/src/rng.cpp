#include "randgrp/rng.hpp"

#include <limits>

#include "randgrp/error.hpp"

namespace randgrp {

BigInt uniform_below(Rng& rng, BigInt const& n) {
  if (n < 1) {
    throw PreconditionError("uniform_below: bound must be positive");
  }
  if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return BigInt(uniform_below(rng, static_cast<std::uint64_t>(n)));
  }
  unsigned const bits = boost::multiprecision::msb(n) + 1;
  unsigned const words = (bits + 63) / 64;
  unsigned const top_bits = bits - 64 * (words - 1);
  std::uint64_t const top_mask =
      top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  for (;;) {
    BigInt x = 0;
    for (unsigned i = 0; i < words; ++i) {
      std::uint64_t w = rng();
      if (i == 0) {
        w &= top_mask;
      }
      x <<= 64;
      x += w;
    }
    if (x < n) {
      return x;
    }
  }
}

}  // namespace randgrp
