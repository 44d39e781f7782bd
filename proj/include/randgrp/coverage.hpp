#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "randgrp/presentation.hpp"

namespace randgrp {

// The distinct reduced words of one length k occurring as factors of cyclic
// conjugates of the relators and their inverses.  Relators shorter than k
// contribute nothing.
class FactorSet {
 public:
  FactorSet(Presentation const& p, std::size_t k);

  std::size_t length() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return count_; }
  bool contains(Word const& w) const;

 private:
  std::uint64_t key(Word const& w) const;

  std::size_t k_;
  unsigned bits_;  // bits per letter in a key
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bitmap_;  // dense form for small k
  std::vector<std::uint64_t> sorted_;  // sorted distinct keys otherwise
};

// 2m (2m-1)^(k-1), saturating at UINT64_MAX.
std::uint64_t reduced_word_count(int m, std::size_t k);

// Every reduced word of length k occurs in some cyclic conjugate of some
// relator^(+-1).  Requires k >= 1.
bool covers_all(Presentation const& p, std::size_t k);

struct CoverageReport {
  std::size_t m_star = 0;
  // A reduced word of length m_star + 1 absent from every relator; present
  // when m_star is below the longest relator length.
  std::optional<Word> missing_witness;
  // k -> number of distinct reduced factors of length k, for k = 1..m_star+1.
  std::map<std::size_t, std::uint64_t> per_length_counts;
};

CoverageReport m_star(Presentation const& p);

}  // namespace randgrp
