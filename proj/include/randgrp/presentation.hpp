#pragma once

#include <vector>

#include "randgrp/word.hpp"

namespace randgrp {

// <s_1, ..., s_m | r_1, ..., r_n> with every r_i nonempty and cyclically
// reduced.
struct Presentation {
  int generators = 0;
  std::vector<Word> relators;

  // Throws PreconditionError naming the first offending relator.
  void validate() const;

  std::size_t max_relator_length() const noexcept;
  std::size_t min_relator_length() const noexcept;
  std::size_t total_length() const noexcept;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

}  // namespace randgrp
