#include "randgrp/rational.hpp"

#include <cctype>
#include <limits>

namespace randgrp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string const& s, std::size_t& pos) {
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw ParseError("expected digits in rational '" + s + "'", 0, 0);
  }
  __int128 v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = 10 * v + (s[pos] - '0');
    if (v > std::numeric_limits<std::int64_t>::max()) {
      throw ParseError("rational '" + s + "' out of range", 0, 0);
    }
    ++pos;
  }
  return static_cast<std::int64_t>(neg ? -v : v);
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) {
    throw PreconditionError("rational arithmetic overflow");
  }
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den));
}

Rational Rational::parse(std::string const& text) {
  std::size_t pos = 0;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = parse_int(text, pos);
    if (pos != slash) {
      throw ParseError("malformed rational '" + text + "'", 0, 0);
    }
    ++pos;
    std::int64_t d = parse_int(text, pos);
    if (pos != text.size()) {
      throw ParseError("malformed rational '" + text + "'", 0, 0);
    }
    if (d == 0) {
      throw ParseError("zero denominator in '" + text + "'", 0, 0);
    }
    return Rational(n, d);
  }
  bool neg = !text.empty() && text[0] == '-';
  std::int64_t whole = parse_int(text, pos);
  if (pos == text.size()) {
    return Rational(whole);
  }
  if (text[pos] != '.') {
    throw ParseError("malformed rational '" + text + "'", 0, 0);
  }
  ++pos;
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    if (scale > 100'000'000'000'000'000LL / 10) {
      throw ParseError("too many decimal digits in '" + text + "'", 0, 0);
    }
    frac = 10 * frac + (text[pos] - '0');
    scale *= 10;
    ++pos;
  }
  if (pos != text.size()) {
    throw ParseError("malformed rational '" + text + "'", 0, 0);
  }
  Rational f(frac, scale);
  return neg ? Rational(whole) - f : Rational(whole) + f;
}

}  // namespace randgrp
