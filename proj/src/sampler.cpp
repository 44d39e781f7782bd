#include "randgrp/sampler.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "randgrp/counting.hpp"
#include "randgrp/error.hpp"

namespace randgrp {

namespace {

void check_length(int l) {
  if (l < 1) {
    throw PreconditionError("relator length must be at least 1, got " +
                            std::to_string(l));
  }
}

// For a letter y placed with j letters still to come, the completions that
// avoid ending in the forbidden letter f number
//   (2m-1)^j - q_(j-1) - penalty(j, y)     (j >= 1)
//   1 - [y == f]                           (j == 0)
// where penalty is 0 or 1 depending on y's relation to f and the parity of
// j - 1 (p_n, r_n exceed q_n by one in a parity pattern).  Writing
// base(j) = (2m-1)^j - q_(j-1), a proposal with penalty 1 is rejected with
// probability 1/base(j), which makes each letter's law proportional to its
// exact completion count.
class CompletionWeights {
 public:
  explicit CompletionWeights(int m) : m_(m) {
    // base(j) exactly while it fits in 64 bits.
    small_.push_back(1);  // j == 0
    for (int j = 1;; ++j) {
      BigInt b = base_big(j);
      if (b > BigInt(std::numeric_limits<std::uint64_t>::max())) {
        break;
      }
      small_.push_back(static_cast<std::uint64_t>(b));
    }
  }

  static bool penalized(int j, std::uint32_t y, std::uint32_t f) {
    if (j == 0) {
      return y == f;
    }
    if ((j - 1) % 2 == 1) {
      return y == f;
    }
    return y != (f ^ 1u);
  }

  // True with probability 1/base(j).
  bool reject(int j, Rng& rng) const {
    if (static_cast<std::size_t>(j) < small_.size()) {
      return uniform_below(rng, small_[static_cast<std::size_t>(j)]) == 0;
    }
    // base(j) >= 2^64: the event needs the first 64-bit draw to be zero,
    // then succeeds with the remaining probability 2^64 / base(j).
    if (rng() != 0) {
      return false;
    }
    BigInt const b = base_big(j);
    BigInt const two64 = BigInt(1) << 64;
    return uniform_below(rng, b) < two64;
  }

 private:
  BigInt base_big(int j) const {
    BigInt pw = boost::multiprecision::pow(BigInt(2 * m_ - 1),
                                           static_cast<unsigned>(j));
    return pw - closed_form_q(m_, j - 1);
  }

  int m_;
  std::vector<std::uint64_t> small_;
};

Word sample_with(int m, int l, CompletionWeights const& weights, Rng& rng) {
  std::uint32_t const alphabet = static_cast<std::uint32_t>(2 * m);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(l));
  std::uint32_t const first =
      static_cast<std::uint32_t>(uniform_below(rng, alphabet));
  letters.push_back(Letter::from_code(first));
  std::uint32_t const forbidden_last = first ^ 1u;
  std::uint32_t prev = first;
  for (int pos = 1; pos < l; ++pos) {
    int const remaining = l - 1 - pos;
    std::uint32_t const back = prev ^ 1u;
    std::uint32_t y = 0;
    for (;;) {
      y = static_cast<std::uint32_t>(uniform_below(rng, alphabet - 1));
      if (y >= back) {
        ++y;
      }
      if (!CompletionWeights::penalized(remaining, y, forbidden_last) ||
          !weights.reject(remaining, rng)) {
        break;
      }
    }
    letters.push_back(Letter::from_code(y));
    prev = y;
  }
  return Word(std::move(letters));
}

void check_m(int m) {
  if (m < 2) {
    throw PreconditionError("generator count must be at least 2, got " +
                            std::to_string(m));
  }
}

}  // namespace

Word sample_cyclically_reduced(int m, int l, Rng& rng) {
  check_m(m);
  check_length(l);
  thread_local std::map<int, CompletionWeights> cache;
  auto it = cache.try_emplace(m, m).first;
  return sample_with(m, l, it->second, rng);
}

Presentation sample_few_relator(FewRelatorConfig const& cfg) {
  check_m(cfg.m);
  check_length(cfg.l);
  if (cfg.n < 1) {
    throw PreconditionError("few relator model needs n >= 1");
  }
  CompletionWeights weights(cfg.m);
  BigInt const total = count_cyclically_reduced_upto(cfg.m, cfg.l);
  Presentation p;
  p.generators = cfg.m;
  p.relators.reserve(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    Rng rng(subseed(cfg.seed, {static_cast<std::uint64_t>(i)}));
    // Length k with probability N_k / N_(<=l): locate u among the blocks
    // [N_(<=k-1), N_(<=k)), scanning down from k = l where the mass sits.
    BigInt const u = uniform_below(rng, total);
    BigInt upper = total;
    int k = cfg.l;
    for (; k > 1; --k) {
      upper -= count_cyclically_reduced_closed(cfg.m, k);
      if (u >= upper) {
        break;
      }
    }
    p.relators.push_back(sample_with(cfg.m, k, weights, rng));
  }
  return p;
}

std::int64_t density_relator_count(int m, Rational const& d, int l,
                                   std::int64_t cap) {
  check_m(m);
  check_length(l);
  if (!(d > Rational(0)) || !(d < Rational(1))) {
    throw PreconditionError("density must lie in (0, 1), got " +
                            d.to_string());
  }
  Rational const e = d * Rational(l);
  double const log_count = e.to_double() * std::log(2.0 * m - 1.0);
  if (log_count > std::log(static_cast<double>(cap)) + 1.0) {
    throw PreconditionError("density model relator count (2m-1)^(dl) = " +
                            std::to_string(2 * m - 1) + "^" + e.to_string() +
                            " exceeds the cap of " + std::to_string(cap));
  }
  double const approx = std::exp(log_count);
  std::int64_t count = static_cast<std::int64_t>(std::floor(approx));
  // Correct the floor when the power is (close to) an integer k: it is an
  // integer exactly when k^den == (2m-1)^num.
  std::int64_t const nearest = std::llround(approx);
  if (e.den() <= 64 &&
      std::abs(approx - static_cast<double>(nearest)) <
          1e-9 * std::max(1.0, approx)) {
    BigInt lhs = boost::multiprecision::pow(BigInt(nearest),
                                            static_cast<unsigned>(e.den()));
    BigInt rhs = boost::multiprecision::pow(BigInt(2 * m - 1),
                                            static_cast<unsigned>(e.num()));
    count = lhs <= rhs ? nearest : nearest - 1;
  }
  if (count < 1) {
    count = 1;
  }
  if (count > cap) {
    throw PreconditionError("density model relator count " +
                            std::to_string(count) + " exceeds the cap of " +
                            std::to_string(cap));
  }
  return count;
}

Presentation sample_density(DensityConfig const& cfg) {
  std::int64_t const count = density_relator_count(cfg.m, cfg.d, cfg.l, cfg.cap);
  CompletionWeights weights(cfg.m);
  Presentation p;
  p.generators = cfg.m;
  p.relators.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    Rng rng(subseed(cfg.seed, {static_cast<std::uint64_t>(i)}));
    p.relators.push_back(sample_with(cfg.m, cfg.l, weights, rng));
  }
  return p;
}

}  // namespace randgrp
