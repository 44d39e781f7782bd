#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randgrp/error.hpp"

namespace randgrp {

// A generator s_i (sign +1) or its inverse (sign -1), generators numbered
// from 1.  Internally a dense code 2(i-1) + (sign < 0), so that a letter and
// its inverse differ only in the low bit.  Letters order by code, which gives
// the alphabet order a < A < b < B < ... used for shortlex comparisons.
class Letter {
 public:
  constexpr Letter() = default;

  Letter(int generator, int sign) {
    if (generator < 1 || (sign != 1 && sign != -1)) {
      throw PreconditionError("invalid letter: generator " +
                              std::to_string(generator) + ", sign " +
                              std::to_string(sign));
    }
    code_ = 2 * static_cast<std::uint32_t>(generator - 1) + (sign < 0 ? 1 : 0);
  }

  static constexpr Letter from_code(std::uint32_t code) noexcept {
    Letter x;
    x.code_ = code;
    return x;
  }

  constexpr int generator() const noexcept {
    return static_cast<int>(code_ / 2) + 1;
  }
  constexpr int sign() const noexcept { return (code_ & 1u) ? -1 : 1; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

// A finite sequence of letters.  Words are values: every operation below
// returns a new word and never mutates its argument.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Text syntax: 'a'..'z' are generators 1..26, 'A'..'Z' their inverses;
  // "g<k>" / "G<k>" name generator k or its inverse for any k >= 1.
  // Whitespace is not allowed inside a word.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const noexcept { return letters_.front(); }
  Letter back() const noexcept { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<Letter const> letters() const noexcept { return letters_; }

  // Largest generator index occurring, 0 for the empty word.
  int max_generator() const noexcept;

  Word subword(std::size_t pos, std::size_t len) const;

  // Letters in the compact form; "g<k>" form is used only when a generator
  // beyond 26 occurs.
  std::string to_string() const;

  friend Word operator*(Word const& u, Word const& v);

  friend bool operator==(Word const&, Word const&) = default;
  // Shortlex: shorter words first, then lexicographic by letter code.
  friend std::strong_ordering operator<=>(Word const& u, Word const& v);

 private:
  std::vector<Letter> letters_;
};

bool is_reduced(Word const& w);
bool is_cyclically_reduced(Word const& w);

// Free reduction: cancel adjacent x x^-1 pairs until none remain.
Word reduce(Word const& w);

// Strips matching inverse first/last letters.  Throws if w is not reduced.
Word cyclic_reduce(Word const& w);

Word inverse(Word const& w);

// Rotation starting at letter `shift`, i.e. w[shift..] w[..shift].
Word rotate(Word const& w, std::size_t shift);

struct Conjugate {
  std::size_t shift;
  Word word;

  friend bool operator==(Conjugate const&, Conjugate const&) = default;
};

// All |w| rotations of a nonempty cyclically reduced word, tagged by shift.
std::vector<Conjugate> cyclic_conjugates(Word const& w);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace randgrp
