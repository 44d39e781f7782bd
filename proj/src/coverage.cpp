#include "randgrp/coverage.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "randgrp/error.hpp"

namespace randgrp {

namespace {

constexpr unsigned kMaxBitmapBits = 28;

unsigned bits_per_letter(int m) {
  return static_cast<unsigned>(
      std::bit_width(static_cast<unsigned>(2 * m - 1)));
}

}  // namespace

std::uint64_t reduced_word_count(int m, std::size_t k) {
  if (k == 0) {
    return 1;
  }
  std::uint64_t const cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = static_cast<std::uint64_t>(2 * m);
  for (std::size_t i = 1; i < k; ++i) {
    if (out > cap / static_cast<std::uint64_t>(2 * m - 1)) {
      return cap;
    }
    out *= static_cast<std::uint64_t>(2 * m - 1);
  }
  return out;
}

FactorSet::FactorSet(Presentation const& p, std::size_t k)
    : k_(k), bits_(bits_per_letter(p.generators)) {
  if (k == 0) {
    throw PreconditionError("factor length must be at least 1");
  }
  if (bits_ * k > 64) {
    throw PreconditionError("factor length " + std::to_string(k) +
                            " too long to index for " +
                            std::to_string(p.generators) + " generators");
  }
  unsigned const key_bits = static_cast<unsigned>(bits_ * k);
  std::uint64_t const mask =
      key_bits == 64 ? ~0ull : ((1ull << key_bits) - 1);
  bool const dense = key_bits <= kMaxBitmapBits;
  if (dense) {
    bitmap_.assign(((1ull << key_bits) + 63) / 64, 0);
  }

  for (Word const& r : p.relators) {
    if (r.size() < k) {
      continue;
    }
    for (int sign : {1, -1}) {
      Word const c = sign > 0 ? r : inverse(r);
      std::size_t const len = c.size();
      std::uint64_t key = 0;
      // Slide a k-letter window over c c[0..k-1).
      for (std::size_t i = 0; i < len + k - 1; ++i) {
        key = ((key << bits_) | c[i % len].code()) & mask;
        if (i + 1 < k) {
          continue;
        }
        if (dense) {
          bitmap_[key >> 6] |= 1ull << (key & 63);
        } else {
          sorted_.push_back(key);
        }
      }
    }
  }
  if (dense) {
    for (std::uint64_t w : bitmap_) {
      count_ += static_cast<std::uint64_t>(std::popcount(w));
    }
  } else {
    std::sort(sorted_.begin(), sorted_.end());
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    sorted_.shrink_to_fit();
    count_ = sorted_.size();
  }
}

std::uint64_t FactorSet::key(Word const& w) const {
  std::uint64_t key = 0;
  for (Letter x : w) {
    key = (key << bits_) | x.code();
  }
  return key;
}

bool FactorSet::contains(Word const& w) const {
  if (w.size() != k_) {
    return false;
  }
  std::uint64_t const kk = key(w);
  if (!bitmap_.empty()) {
    return (bitmap_[kk >> 6] >> (kk & 63)) & 1ull;
  }
  return std::binary_search(sorted_.begin(), sorted_.end(), kk);
}

bool covers_all(Presentation const& p, std::size_t k) {
  if (k < 1) {
    throw PreconditionError("covers_all: k must be at least 1");
  }
  p.validate();
  std::uint64_t const need = reduced_word_count(p.generators, k);
  // Pigeonhole: each relator^(+-1) has |r| factors of each length.
  if (need > 2 * static_cast<std::uint64_t>(p.total_length())) {
    return false;
  }
  return FactorSet(p, k).size() == need;
}

namespace {

// Lexicographically first reduced word of length k not in `present`.
std::optional<Word> first_missing(int m, FactorSet const& present) {
  std::size_t const k = present.length();
  std::uint32_t const alphabet = static_cast<std::uint32_t>(2 * m);
  // Depth-first over reduced words in code order.
  std::vector<Letter> buf;
  buf.reserve(k);
  std::optional<Word> found;
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k) {
      Word w(buf);
      if (!present.contains(w)) {
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (std::uint32_t c = 0; c < alphabet; ++c) {
      if (depth > 0 && buf.back().code() == (c ^ 1u)) {
        continue;
      }
      buf.push_back(Letter::from_code(c));
      if (self(self, depth + 1)) {
        return true;
      }
      buf.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace

CoverageReport m_star(Presentation const& p) {
  p.validate();
  CoverageReport out;
  std::size_t const longest = p.max_relator_length();
  for (std::size_t k = 1;; ++k) {
    std::uint64_t const need = reduced_word_count(p.generators, k);
    if (bits_per_letter(p.generators) * k > 64) {
      // Longer than any indexable factor; coverage must have failed already
      // by pigeonhole, so this is unreachable for valid presentations.
      break;
    }
    FactorSet const factors(p, k);
    out.per_length_counts[k] = factors.size();
    if (factors.size() != need) {
      out.m_star = k - 1;
      if (out.m_star < longest) {
        out.missing_witness = first_missing(p.generators, factors);
      }
      break;
    }
  }
  return out;
}

}  // namespace randgrp
