#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "randgrp/word.hpp"

using namespace randgrp;
using namespace randgrp::test;

namespace {

Word w(char const* s) { return Word::parse(s); }

// Is v a conjugate of u in the free group?  Searches all g with |g| <= 8.
bool free_conjugate(Word const& u, Word const& v) {
  for (int len = 0; len <= 8; ++len) {
    bool found = false;
    for_each_word(2, len, [&](Codes const& g) {
      if (!found && codes_reduced(g)) {
        Word const x = to_word(g);
        found = reduce(x * u * inverse(x)) == reduce(v);
      }
    });
    if (found) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("free reduction", "[words]") {
  CHECK(reduce(w("aAb")) == w("b"));
  CHECK(reduce(w("")).empty());
  CHECK(reduce(w("abBA")).empty());
  CHECK(reduce(w("abBcCAd")) == w("d"));
  CHECK(reduce(reduce(w("aBbAAb"))) == reduce(w("aBbAAb")));
}

TEST_CASE("cyclic reduction", "[words]") {
  CHECK(cyclic_reduce(w("Aba")) == w("b"));
  CHECK(cyclic_reduce(w("ab")) == w("ab"));
  CHECK(cyclic_reduce(w("B")) == w("B"));
  CHECK(cyclic_reduce(w("abcBA")) == w("c"));
  CHECK_THROWS_AS(cyclic_reduce(w("aAb")), PreconditionError);
}

TEST_CASE("cyclic reduction gives a conjugate", "[words]") {
  for (int len = 1; len <= 6; ++len) {
    for (Codes const& c : all_reduced(2, len)) {
      Word const u = to_word(c);
      Word const v = cyclic_reduce(u);
      CHECK(is_cyclically_reduced(v));
      CHECK(v.size() <= u.size());
      if (len <= 4) {
        CHECK(free_conjugate(u, v));
      }
    }
  }
}

TEST_CASE("cyclic conjugates", "[words]") {
  auto cs = cyclic_conjugates(w("aab"));
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == Conjugate{0, w("aab")});
  CHECK(cs[1] == Conjugate{1, w("aba")});
  CHECK(cs[2] == Conjugate{2, w("baa")});

  auto ps = cyclic_conjugates(w("aaaa"));
  REQUIRE(ps.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(ps[i].shift == i);
    CHECK(ps[i].word == w("aaaa"));
  }
  CHECK(cyclic_conjugates(w("ab")).size() == 2);
  CHECK_THROWS_AS(cyclic_conjugates(Word()), PreconditionError);
  CHECK_THROWS_AS(cyclic_conjugates(w("abA")), PreconditionError);

  for (Codes const& c : all_reduced(2, 5)) {
    if (!codes_cyclically_reduced(c)) continue;
    for (auto const& conj : cyclic_conjugates(to_word(c))) {
      CHECK(is_reduced(conj.word));
    }
  }
}

TEST_CASE("inverse", "[words]") {
  CHECK(inverse(w("aab")) == w("BAA"));
  CHECK(inverse(w("")).empty());
  CHECK(inverse(w("aB")) == w("bA"));
  for (Codes const& c : all_reduced(2, 4)) {
    Word const u = to_word(c);
    CHECK(inverse(inverse(u)) == u);
    CHECK(is_cyclically_reduced(inverse(u)) == is_cyclically_reduced(u));
  }
}

TEST_CASE("text syntax", "[words]") {
  CHECK(w("aBc").size() == 3);
  CHECK(w("aBc")[1] == Letter(2, -1));
  CHECK(w("g1G2") == w("aB"));
  CHECK(w("g27").front() == Letter(27, 1));
  CHECK(w("g27G3").to_string() == "g27G3");
  CHECK(w("abAB").to_string() == "abAB");
  CHECK_THROWS_AS(w("a b"), ParseError);
  CHECK_THROWS_AS(w("a1"), ParseError);
  try {
    w("ab?");
    FAIL("no throw");
  } catch (ParseError const& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("shortlex order", "[words]") {
  CHECK(w("b") < w("aa"));
  CHECK(w("a") < w("A"));
  CHECK(w("A") < w("b"));
  CHECK(w("ab") < w("aB"));
}
