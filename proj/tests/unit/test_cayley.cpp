#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "randgrp/cayley.hpp"
#include "randgrp/sampler.hpp"

using namespace randgrp;
using namespace randgrp::test;

namespace {

Presentation genus2() {
  Presentation p;
  p.generators = 4;
  p.relators = {Word::parse("abABcdCD")};
  return p;
}

std::size_t free_ball(int m, int r) {
  std::size_t total = 1, level = 2 * m;
  for (int i = 1; i <= r; ++i) {
    total += level;
    level *= 2 * m - 1;
  }
  return total;
}

}  // namespace

TEST_CASE("ball sizes", "[cayley]") {
  CHECK(CayleyBall(genus2(), 0).size() == 1);
  CHECK(CayleyBall(genus2(), 2).size() == 65);
  for (int r = 0; r <= 3; ++r) {
    CHECK(CayleyBall(genus2(), r).size() == free_ball(4, r));
  }
  // A long C'(1/6) relator over two generators.
  Presentation two;
  two.generators = 2;
  Rng rng(12);
  two.relators = {sample_cyclically_reduced(2, 200, rng)};
  REQUIRE(is_c_prime(two, Rational(1, 6)).holds);
  for (int r = 0; r <= 3; ++r) {
    CHECK(CayleyBall(two, r).size() == free_ball(2, r));
  }
  // Level 4 of the genus-2 ball: abAB = DCdc and its 16 relatives merge.
  auto levels = CayleyBall(genus2(), 4).level_sizes();
  CHECK(levels[0] == 1);
  CHECK(levels[3] == 392);
  CHECK(levels[4] < 2744);
}

TEST_CASE("ball preconditions", "[cayley]") {
  Presentation torus;
  torus.generators = 2;
  torus.relators = {Word::parse("abAB")};
  CHECK_THROWS_AS(CayleyBall(torus, 2), PreconditionError);
  CHECK_THROWS_AS(CayleyBall(genus2(), -1), PreconditionError);
  CHECK_THROWS_AS(CayleyBall(genus2(), 9), PreconditionError);
}

TEST_CASE("ball structure", "[cayley]") {
  CayleyBall ball(genus2(), 4);
  auto const& dehn = ball.reducer();
  Rng rng(1);
  for (std::size_t v = 0; v < ball.size(); ++v) {
    CHECK(static_cast<int>(ball.word(v).size()) == ball.distance(v));
    CHECK(is_reduced(ball.word(v)));
    for (std::uint32_t c = 0; c < 8; ++c) {
      auto n = ball.neighbor(v, c);
      if (n >= 0) {
        CHECK(ball.neighbor(static_cast<std::size_t>(n), c ^ 1u) == static_cast<std::int32_t>(v));
        CHECK(std::abs(ball.distance(static_cast<std::size_t>(n)) - ball.distance(v)) <= 1);
      } else {
        CHECK(ball.distance(v) == ball.radius());
      }
    }
  }
  // Distinct vertices are distinct group elements.
  for (int t = 0; t < 3000; ++t) {
    std::size_t u = uniform_below(rng, ball.size()), v = uniform_below(rng, ball.size());
    if (u == v) continue;
    CHECK(!dehn.is_trivial(ball.word(u) * inverse(ball.word(v))));
  }
  // Words name shortlex-least geodesics: first in level order.
  for (std::size_t v = 1; v < ball.size(); ++v) {
    if (ball.distance(v) == ball.distance(v - 1)) {
      CHECK(ball.word(v - 1) < ball.word(v));
    }
  }
}

TEST_CASE("ball agrees with the matrix representation", "[cayley]") {
  SurfaceGroupMatrices oracle;
  REQUIRE(oracle.found());
  CayleyBall ball(genus2(), 4);
  std::vector<Codes> words;
  for (int l = 0; l <= 4; ++l) {
    for (auto& w : all_reduced(4, l)) words.push_back(w);
  }
  std::vector<std::size_t> vertex;
  for (auto const& w : words) {
    auto v = ball.follow(to_word(w));
    REQUIRE(v);
    vertex.push_back(*v);
  }
  Rng rng(4);
  for (int t = 0; t < 20000; ++t) {
    std::size_t i = uniform_below(rng, words.size()), j = uniform_below(rng, words.size());
    CHECK((vertex[i] == vertex[j]) == oracle.equal(words[i], words[j]));
  }
}

TEST_CASE("polygons are slim", "[cayley]") {
  CayleyBall ball(genus2(), 4);
  auto tri = measure_slimness(ball, 100, 3, 7);
  CHECK(tri.per_sample.size() == 100);
  CHECK(tri.max <= 16);
  CHECK(tri.max == *std::max_element(tri.per_sample.begin(), tri.per_sample.end()));
  auto again = measure_slimness(ball, 100, 3, 7);
  CHECK(again.per_sample == tri.per_sample);

  auto bigons = measure_slimness(ball, 100, 2, 8);
  CHECK(bigons.max <= 5);

  Rng rng(3);
  std::size_t v = ball.size() / 3;
  CHECK(polygon_slimness(ball, {v, v, v}, rng) == 0);
  CHECK(polygon_slimness(ball, {0, 1}, rng) == 0);
}

TEST_CASE("slimness trend fit", "[cayley]") {
  CayleyBall ball(genus2(), 4);
  auto trend = slimness_trend(ball, Rational(1, 8), 8, {3, 4, 6}, 30, 11);
  CHECK(trend.slope == Catch::Approx(8 / (2 * std::log(4.0))));
  CHECK(trend.fitted_c >= 0);
  REQUIRE(trend.results.size() == 3);
  for (auto const& r : trend.results) {
    CHECK(r.max <= trend.slope * std::log(static_cast<double>(r.sides)) + trend.fitted_c + 1e-9);
  }
  CHECK_THROWS_AS(slimness_trend(ball, Rational(1, 5), 8, {3}, 5, 1), PreconditionError);
}
