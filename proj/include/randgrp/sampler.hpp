#pragma once

#include <cstdint>

#include "randgrp/presentation.hpp"
#include "randgrp/rational.hpp"
#include "randgrp/rng.hpp"

namespace randgrp {

struct FewRelatorConfig {
  int m = 2;       // generators
  int n = 1;       // relators
  int l = 1;       // maximum relator length
  std::uint64_t seed = 0;
};

// Default ceiling on the number of relators a density presentation may have.
inline constexpr std::int64_t kDensityRelatorCap = 100'000;

struct DensityConfig {
  int m = 2;
  Rational d{1, 10};  // density, 0 < d < 1
  int l = 1;          // exact relator length
  std::uint64_t seed = 0;
  std::int64_t cap = kDensityRelatorCap;
};

// Exactly uniform over the N_l cyclically reduced words of length l >= 1.
// Letters are drawn one at a time, each weighted by its exact number of
// valid completions (the p/q/r endpoint counts).
Word sample_cyclically_reduced(int m, int l, Rng& rng);

// n i.i.d. relators, uniform over cyclically reduced words of length <= l.
// Relator i draws from its own generator seeded with subseed(seed, {i}).
Presentation sample_few_relator(FewRelatorConfig const& cfg);

// floor((2m-1)^(d l)), at least 1.  Throws if the count exceeds `cap`.
std::int64_t density_relator_count(int m, Rational const& d, int l,
                                   std::int64_t cap = kDensityRelatorCap);

// density_relator_count(...) i.i.d. uniform cyclically reduced relators of
// length exactly l, duplicates allowed.
Presentation sample_density(DensityConfig const& cfg);

}  // namespace randgrp
