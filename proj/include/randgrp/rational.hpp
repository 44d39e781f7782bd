#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "randgrp/error.hpp"

namespace randgrp {

// Exact rational with 64-bit parts, always normalized (den > 0, gcd 1).
// Sufficient for ratios of word lengths and user-supplied thresholds.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) {
      throw PreconditionError("rational with zero denominator");
    }
    normalize();
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Parses "p/q", an integer, or a finite decimal such as "0.125".
  static Rational parse(std::string const& text);

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(Rational const&, Rational const&) = default;

  friend std::strong_ordering operator<=>(Rational const& x,
                                          Rational const& y) {
    __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    return lhs <=> rhs;
  }

  friend Rational operator+(Rational const& x, Rational const& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ +
                         static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(Rational const& x, Rational const& y) {
    return x + Rational(-y.num_, y.den_);
  }
  friend Rational operator*(Rational const& x, Rational const& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.num_,
                     static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(Rational const& x, Rational const& y) {
    if (y.num_ == 0) {
      throw PreconditionError("rational division by zero");
    }
    return from_wide(static_cast<__int128>(x.num_) * y.den_,
                     static_cast<__int128>(x.den_) * y.num_);
  }

  // floor(x) as an integer.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
      --q;
    }
    return q;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace randgrp
