#include "randgrp/word.hpp"

#include <algorithm>
#include <cctype>

namespace randgrp {

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool numeric = (c == 'g' || c == 'G') && i + 1 < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (numeric) {
      std::size_t start = i;
      ++i;
      long long k = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = 10 * k + (text[i] - '0');
        if (k > 1'000'000'000) {
          throw ParseError("generator index too large", 1, start + 1);
        }
        ++i;
      }
      if (k < 1) {
        throw ParseError("generator index must be at least 1", 1, start + 1);
      }
      out.emplace_back(static_cast<int>(k), c == 'g' ? 1 : -1);
    } else if (c >= 'a' && c <= 'z') {
      out.emplace_back(c - 'a' + 1, 1);
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      out.emplace_back(c - 'A' + 1, -1);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word",
                       1, i + 1);
    }
  }
  return Word(std::move(out));
}

int Word::max_generator() const noexcept {
  int g = 0;
  for (Letter x : letters_) {
    g = std::max(g, x.generator());
  }
  return g;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw PreconditionError("subword out of range");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

std::string Word::to_string() const {
  bool numeric = max_generator() > 26;
  std::string s;
  for (Letter x : letters_) {
    if (numeric) {
      s += x.sign() > 0 ? 'g' : 'G';
      s += std::to_string(x.generator());
    } else {
      s += static_cast<char>((x.sign() > 0 ? 'a' : 'A') + x.generator() - 1);
    }
  }
  return s;
}

Word operator*(Word const& u, Word const& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(Word const& u, Word const& v) {
  if (u.size() != v.size()) {
    return u.size() <=> v.size();
  }
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

bool is_reduced(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_reduced(Word const& w) {
  return is_reduced(w) &&
         (w.size() < 2 || w.front() != w.back().inverse());
}

Word reduce(Word const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(Word const& w) {
  if (!is_reduced(w)) {
    throw PreconditionError("cyclic_reduce: word " + w.to_string() +
                            " is not freely reduced");
  }
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return w.subword(lo, hi - lo);
}

Word inverse(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word rotate(Word const& w, std::size_t shift) {
  if (w.empty()) {
    return w;
  }
  shift %= w.size();
  std::vector<Letter> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift),
              out.end());
  return Word(std::move(out));
}

std::vector<Conjugate> cyclic_conjugates(Word const& w) {
  if (w.empty()) {
    throw PreconditionError("cyclic_conjugates: empty word");
  }
  if (!is_cyclically_reduced(w)) {
    throw PreconditionError("cyclic_conjugates: " + w.to_string() +
                            " is not cyclically reduced");
  }
  std::vector<Conjugate> out;
  out.reserve(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) {
    out.push_back({s, rotate(w, s)});
  }
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  // FNV-1a over letter codes.
  std::uint64_t h = 14695981039346656037ull;
  for (Letter x : w) {
    h ^= x.code() + 1;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace randgrp
