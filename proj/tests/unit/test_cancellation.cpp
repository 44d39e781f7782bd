#include <catch2/catch_amalgamated.hpp>

#include <chrono>

#include "oracles.hpp"
#include "randgrp/cancellation.hpp"
#include "randgrp/sampler.hpp"

using namespace randgrp;
using namespace randgrp::test;

namespace {

Presentation pres(int m, std::vector<char const*> rels) {
  Presentation p;
  p.generators = m;
  for (auto r : rels) p.relators.push_back(Word::parse(r));
  return p;
}

Presentation random_small(Rng& rng) {
  Presentation p;
  p.generators = 2;
  int const n = 1 + static_cast<int>(uniform_below(rng, 3));
  for (int i = 0; i < n; ++i) {
    int const l = 1 + static_cast<int>(uniform_below(rng, 12));
    p.relators.push_back(sample_cyclically_reduced(2, l, rng));
  }
  return p;
}

}  // namespace

TEST_CASE("known piece reports", "[cancellation]") {
  auto torus = piece_report(pres(2, {"abAB"}));
  CHECK(torus.max_piece_length == std::vector<std::size_t>{1});
  CHECK(torus.lambda_star == Rational(1, 4));

  auto genus2 = piece_report(pres(4, {"abABcdCD"}));
  CHECK(genus2.max_piece_length == std::vector<std::size_t>{1});
  CHECK(genus2.lambda_star == Rational(1, 8));

  auto ab = piece_report(pres(2, {"ab"}));
  CHECK(ab.max_piece_length == std::vector<std::size_t>{0});
  CHECK(ab.lambda_star == Rational(0));
  CHECK(!ab.witness);

  auto power = piece_report(pres(2, {"aaaa"}));
  CHECK(power.lambda_star == Rational(1));

  CHECK_THROWS_AS(piece_report(pres(2, {})), PreconditionError);
  CHECK_THROWS_AS(piece_report(pres(2, {"aA"})), PreconditionError);
}

TEST_CASE("witness is a common prefix of two distinct conjugates", "[cancellation]") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    Presentation p = random_small(rng);
    auto rep = piece_report(p);
    if (!rep.witness) {
      CHECK(rep.lambda_star == Rational(0));
      continue;
    }
    auto const& w = *rep.witness;
    CHECK(!(w.first == w.second));
    Word const a = conjugate_word(p, w.first);
    Word const b = conjugate_word(p, w.second);
    CHECK(a.subword(0, w.piece.size()) == w.piece);
    CHECK(b.subword(0, w.piece.size()) == w.piece);
    CHECK(Rational(static_cast<std::int64_t>(w.piece.size()),
                   static_cast<std::int64_t>(p.relators[w.first.relator].size())) ==
          rep.lambda_star);
  }
}

TEST_CASE("pieces match the quadratic oracle", "[cancellation]") {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    Presentation p = random_small(rng);
    auto fast = piece_report(p);
    auto slow = quadratic_pieces(p);
    INFO(p.relators[0].to_string());
    CHECK(fast.max_piece_length == slow.max_piece);
    CHECK(fast.lambda_star == Rational(slow.num, slow.den));
  }
  // Longer relators and more generators.
  for (int t = 0; t < 100; ++t) {
    Presentation p;
    p.generators = 3;
    for (int i = 0; i < 4; ++i) {
      p.relators.push_back(sample_cyclically_reduced(3, 5 + static_cast<int>(uniform_below(rng, 40)), rng));
    }
    auto fast = piece_report(p);
    auto slow = quadratic_pieces(p);
    CHECK(fast.max_piece_length == slow.max_piece);
  }
}

TEST_CASE("pieces are invariant under conjugation and inversion", "[cancellation]") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    Presentation p = random_small(rng);
    auto const base = piece_report(p).lambda_star;
    Presentation q = p;
    for (auto& r : q.relators) {
      std::size_t s = uniform_below(rng, r.size());
      r = rotate(r, s);
      if (uniform_below(rng, 2) == 1) r = inverse(r);
    }
    CHECK(piece_report(q).lambda_star == base);
  }
}

TEST_CASE("C'(lambda) verdicts", "[cancellation]") {
  auto g2 = pres(4, {"abABcdCD"});
  CHECK(is_c_prime(g2, Rational(1, 6)).holds);
  CHECK(!is_c_prime(g2, Rational(1, 8)).holds);
  CHECK(!is_c_prime(pres(2, {"abAB"}), Rational(1, 6)).holds);
  CHECK_THROWS_AS(is_c_prime(g2, Rational(0)), PreconditionError);
  CHECK_THROWS_AS(is_c_prime(g2, Rational(3, 2)), PreconditionError);
  CHECK(is_c_prime(g2, Rational(1)).holds);

  std::vector<Rational> const lambdas{Rational(1, 24), Rational(1, 12), Rational(1, 8),
                                      Rational(1, 6), Rational(1, 4), Rational(1, 2),
                                      Rational(1)};
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Presentation p = random_small(rng);
    auto rep = piece_report(p);
    bool seen = false;
    for (auto const& l : lambdas) {
      bool h = is_c_prime(p, rep, l).holds;
      CHECK((!seen || h));
      seen = seen || h;
    }
  }
}

TEST_CASE("Dehn's algorithm", "[cancellation]") {
  auto g2 = pres(4, {"abABcdCD"});
  DehnReducer dehn(g2);
  CHECK(dehn.reduce(Word::parse("abABcdCD")).empty());
  CHECK(dehn.reduce(Word::parse("a")) == Word::parse("a"));
  CHECK(dehn.is_trivial(Word::parse("abABcdCDabABcdCD")));
  CHECK(dehn.is_trivial(Word()));
  CHECK(!dehn.is_trivial(Word::parse("b")));
  CHECK(dehn.is_trivial(Word::parse("babABcdCDB")));
  CHECK(dehn.is_trivial(Word::parse("dcDCbaBA")));
  // Replaces the long part: abABc -> dcD.
  CHECK(dehn.reduce(Word::parse("abABc")) == Word::parse("dcD"));
  CHECK(is_c_prime_real(g2, piece_report(g2), 0.15));
  CHECK(!is_c_prime_real(g2, piece_report(g2), 0.125));
  CHECK(is_trivial(Word::parse("cdCDabAB"), g2));
  CHECK_THROWS_AS(DehnReducer(pres(2, {"abAB"})), PreconditionError);
  CHECK_THROWS_AS(dehn.reduce(Word::parse("e")), PreconditionError);

  SurfaceGroupMatrices oracle;
  REQUIRE(oracle.found());
  Rng rng(17);
  for (int t = 0; t < 2000; ++t) {
    // Random products of relator conjugates and free noise.
    Word w;
    int const pieces = 1 + static_cast<int>(uniform_below(rng, 3));
    for (int i = 0; i < pieces; ++i) {
      Word g = sample_cyclically_reduced(4, 1 + static_cast<int>(uniform_below(rng, 3)), rng);
      Word r = rotate(g2.relators[0], uniform_below(rng, 8));
      if (uniform_below(rng, 2)) r = inverse(r);
      w = w * g * r * inverse(g);
    }
    if (uniform_below(rng, 2)) {
      w = w * sample_cyclically_reduced(4, 1 + static_cast<int>(uniform_below(rng, 4)), rng);
    }
    bool const truth = SurfaceGroupMatrices::is_identity(oracle.eval(to_codes(w)));
    CHECK(dehn.is_trivial(w) == truth);
  }
}

TEST_CASE("piece analysis scales", "[cancellation][slow]") {
  auto p = sample_few_relator({2, 2600, 400, 5});
  std::size_t total = 0;
  for (auto const& r : p.relators) total += r.size();
  CHECK(total >= 1000000);
  auto start = std::chrono::steady_clock::now();
  auto rep = piece_report(p);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(rep.lambda_star > Rational(0));
  CHECK(secs < 20.0);
}
