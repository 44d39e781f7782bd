#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "oracles.hpp"
#include "randgrp/counting.hpp"
#include "randgrp/sampler.hpp"

using namespace randgrp;
using namespace randgrp::test;

namespace {

// Pearson statistic of `draws` uniform draws against all cyclically reduced
// words of length l, and the critical value at the given significance.
std::pair<double, double> chi_square(int m, int l, int draws, double alpha,
                                     std::uint64_t seed) {
  std::map<Codes, int> counts;
  for_each_word(m, l, [&](Codes const& c) {
    if (codes_cyclically_reduced(c)) counts[c] = 0;
  });
  Rng rng(seed);
  for (int i = 0; i < draws; ++i) {
    auto it = counts.find(to_codes(sample_cyclically_reduced(m, l, rng)));
    REQUIRE(it != counts.end());
    ++it->second;
  }
  double const expected = static_cast<double>(draws) / counts.size();
  double stat = 0;
  for (auto const& [w, c] : counts) {
    stat += (c - expected) * (c - expected) / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return {stat, boost::math::quantile(boost::math::complement(dist, alpha))};
}

}  // namespace

TEST_CASE("uniform sampler passes chi-square", "[sampler]") {
  for (int l = 1; l <= 4; ++l) {
    auto [stat, critical] = chi_square(2, l, 100000, 1e-3, 1000 + l);
    INFO("l = " << l << " statistic " << stat << " critical " << critical);
    CHECK(stat < critical);
  }
  auto [stat, critical] = chi_square(3, 3, 100000, 1e-3, 77);
  CHECK(stat < critical);
}

TEST_CASE("sampled words are cyclically reduced", "[sampler]") {
  Rng rng(5);
  for (int l : {1, 2, 3, 7, 64, 65, 200, 1000}) {
    for (int i = 0; i < 20; ++i) {
      Word const w = sample_cyclically_reduced(2, l, rng);
      CHECK(w.size() == static_cast<std::size_t>(l));
      CHECK(is_cyclically_reduced(w));
    }
  }
  CHECK_THROWS_AS(sample_cyclically_reduced(2, 0, rng), PreconditionError);
}

TEST_CASE("long words use the exact rejection path", "[sampler]") {
  // Past the point where completion counts overflow 64 bits the first and
  // last letters must still be unbiased.
  Rng rng(9);
  std::map<std::uint32_t, int> first;
  int const draws = 20000;
  for (int i = 0; i < draws; ++i) {
    Word const w = sample_cyclically_reduced(2, 120, rng);
    ++first[w.back().code()];
    CHECK(is_cyclically_reduced(w));
  }
  for (auto const& [code, c] : first) {
    CHECK(std::abs(c - draws / 4.0) < 5 * std::sqrt(draws * 0.25 * 0.75));
  }
}

TEST_CASE("few relator model", "[sampler]") {
  auto p = sample_few_relator({2, 1, 1, 3});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 1);

  // P(|r| = 3) = 28/44 at l = 3.
  int hits = 0;
  int const trials = 5000;
  for (int t = 0; t < trials; ++t) {
    auto q = sample_few_relator({2, 2, 3, static_cast<std::uint64_t>(t)});
    REQUIRE(q.relators.size() == 2);
    for (auto const& r : q.relators) {
      hits += r.size() == 3;
      CHECK(is_cyclically_reduced(r));
    }
  }
  double const p3 = 28.0 / 44.0;
  double const n = 2.0 * trials;
  CHECK(std::abs(hits / n - p3) < 4 * std::sqrt(p3 * (1 - p3) / n));

  CHECK(sample_few_relator({2, 3, 50, 11}) == sample_few_relator({2, 3, 50, 11}));
  CHECK(!(sample_few_relator({2, 3, 50, 11}) == sample_few_relator({2, 3, 50, 12})));
}

TEST_CASE("density relator count", "[sampler]") {
  CHECK(density_relator_count(2, Rational::parse("0.05"), 100) == 243);
  CHECK(density_relator_count(2, Rational::parse("0.1"), 10) == 3);
  CHECK(density_relator_count(2, Rational(1, 1000000), 10) == 1);
  CHECK(density_relator_count(2, Rational::parse("0.05"), 60) == 27);
  CHECK(density_relator_count(2, Rational::parse("0.05"), 140) == 2187);
  CHECK(density_relator_count(3, Rational(1, 4), 4) == 5);
  CHECK_THROWS_AS(density_relator_count(2, Rational(1, 2), 100), PreconditionError);
}

TEST_CASE("density model", "[sampler]") {
  auto p = sample_density({2, Rational::parse("0.05"), 100, 4});
  CHECK(p.relators.size() == 243);
  for (auto const& r : p.relators) {
    CHECK(r.size() == 100);
    CHECK(is_cyclically_reduced(r));
  }
  CHECK(p == sample_density({2, Rational::parse("0.05"), 100, 4}));
}
