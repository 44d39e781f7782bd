#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "randgrp/counting.hpp"

using namespace randgrp;
using namespace randgrp::test;
using boost::multiprecision::cpp_rational;

namespace {

// Reduced words s u x of length n+2 with fixed first letter, by last letter.
std::array<std::uint64_t, 3> brute_endpoints(int m, int n) {
  std::array<std::uint64_t, 3> out{};  // p, q, r
  for_each_word(m, n + 2, [&](Codes const& c) {
    if (c[0] != 0 || !codes_reduced(c)) return;
    if (c.back() == 0) ++out[0];
    else if (c.back() == 1) ++out[1];
    else if (c.back() == 2) ++out[2];
  });
  return out;
}

}  // namespace

TEST_CASE("endpoint counts", "[counting]") {
  auto c1 = endpoint_counts(2, 1);
  CHECK(c1.p == 3);
  CHECK(c1.q == 2);
  CHECK(c1.r == 2);
  CHECK(endpoint_counts(2, 3).q == 20);
  auto c2 = endpoint_counts(2, 2);
  CHECK(c2.p == 7);
  CHECK(c2.q == 6);
  CHECK(c2.r == 7);
  CHECK_THROWS_AS(endpoint_counts(2, 0), PreconditionError);

  for (int m : {2, 3}) {
    for (int n = 1; n <= 6; ++n) {
      auto b = brute_endpoints(m, n);
      auto c = endpoint_counts(m, n);
      CHECK(c.p == b[0]);
      CHECK(c.q == b[1]);
      CHECK(c.r == b[2]);
    }
  }
}

TEST_CASE("parity pattern of endpoint counts", "[counting]") {
  for (int m : {2, 3, 5}) {
    for (int n = 1; n <= 60; ++n) {
      auto c = endpoint_counts(m, n);
      CHECK(c.p == c.q + 1);
      if (n % 2 == 1) {
        CHECK(c.r == c.q);
      } else {
        CHECK(c.r == c.q + 1);
      }
    }
  }
}

TEST_CASE("closed form for q", "[counting]") {
  for (int m : {2, 3, 4}) {
    auto table = endpoint_count_table(m, 200);
    for (int n = 1; n <= 200; ++n) {
      CHECK(closed_form_q(m, n) == table[static_cast<std::size_t>(n)].q);
    }
  }
}

TEST_CASE("ratio bound of endpoint counts", "[counting]") {
  for (int m : {2, 3}) {
    auto table = endpoint_count_table(m, 200);
    for (int n = 1; n <= 200; ++n) {
      auto const& c = table[static_cast<std::size_t>(n)];
      BigInt hi = std::max({c.p, c.q, c.r});
      BigInt lo = std::min({c.p, c.q, c.r});
      cpp_rational ratio(hi, lo);
      cpp_rational bound = 1 + cpp_rational(2, boost::multiprecision::pow(BigInt(2 * m - 1), static_cast<unsigned>(n)));
      CHECK(ratio <= bound);
    }
  }
}

TEST_CASE("cyclically reduced counts", "[counting]") {
  CHECK(count_cyclically_reduced(2, 1) == 4);
  CHECK(count_cyclically_reduced(2, 2) == 12);
  CHECK(count_cyclically_reduced(2, 3) == 28);
  CHECK(count_cyclically_reduced_upto(2, 1) == 4);
  CHECK(count_cyclically_reduced_upto(2, 2) == 16);
  CHECK(count_cyclically_reduced_upto(2, 3) == 44);
  CHECK_THROWS_AS(count_cyclically_reduced(2, 0), PreconditionError);
  CHECK_THROWS_AS(count_cyclically_reduced_upto(2, 0), PreconditionError);

  for (int m : {2, 3}) {
    for (int l = 1; l <= 8; ++l) {
      CHECK(count_cyclically_reduced(m, l) == brute_cyclically_reduced(m, l));
    }
  }
  for (int m : {2, 3, 7}) {
    for (int l = 1; l <= 80; ++l) {
      CHECK(count_cyclically_reduced(m, l) == count_cyclically_reduced_closed(m, l));
    }
  }
}

TEST_CASE("cyclically reduced count is close to (2m-1)^l", "[counting]") {
  for (int m : {2, 3}) {
    for (int l = 1; l <= 60; ++l) {
      cpp_rational ratio(count_cyclically_reduced(m, l),
                         boost::multiprecision::pow(BigInt(2 * m - 1), static_cast<unsigned>(l)));
      CHECK(ratio <= cpp_rational(4, 3));
      CHECK(ratio >= cpp_rational(3, 4));
    }
  }
}

TEST_CASE("omission bound", "[counting]") {
  CHECK(omission_bound({2, 1000, 5}) == Catch::Approx(0.9126).margin(1e-4));
  CHECK(omission_bound({2, 100000, 5}) == Catch::Approx(std::exp(-9.1449)).epsilon(1e-3));
  CHECK(omission_bound({2, 100000, 5}) == Catch::Approx(1.07e-4).epsilon(1e-2));
  CHECK_THROWS_AS(omission_bound({2, 1000, 4}), PreconditionError);
  CHECK_THROWS_AS(omission_bound({2, 20, 5}), PreconditionError);
  CHECK(omission_bound({2, 22, 5}) <= 1.0);
  // No underflow far out.
  CHECK(log_omission_bound({2, 10000000, 5}) < -900);
}

TEST_CASE("omission bound against high-precision evaluation", "[counting]") {
  using boost::multiprecision::cpp_dec_float_50;
  for (auto [l, g] : {std::pair{1000, 5}, {5000, 6}, {30, 7}, {100000, 5}}) {
    cpp_dec_float_50 base = 3;
    cpp_dec_float_50 e = 2 / pow(base, cpp_dec_float_50(l) / 2 - 1) -
                         cpp_dec_float_50(l) / (9 * g * pow(base, g));
    double expect = std::min(1.0, static_cast<double>(exp(e)));
    CHECK(omission_bound({2, l, g}) == Catch::Approx(expect).epsilon(1e-12));
  }
}
