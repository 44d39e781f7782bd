#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "randgrp/presentation.hpp"
#include "randgrp/rational.hpp"

namespace randgrp {

// Names one cyclic conjugate of r^(+1) or r^(-1): the rotation of
// relators[relator]^sign starting at `shift`.  Two conjugates are distinct
// iff their indices differ, even when the words coincide.
struct ConjugateIndex {
  std::size_t relator = 0;
  int sign = 1;
  std::size_t shift = 0;

  friend auto operator<=>(ConjugateIndex const&,
                          ConjugateIndex const&) = default;
};

Word conjugate_word(Presentation const& p, ConjugateIndex const& c);

struct PieceWitness {
  Word piece;
  ConjugateIndex first;   // conjugate of the relator realizing lambda_star
  ConjugateIndex second;  // a distinct conjugate with the same prefix
};

struct PieceReport {
  // Longest piece that is an initial segment of some conjugate of r_i^(+-1).
  std::vector<std::size_t> max_piece_length;
  // max_i max_piece_length[i] / |r_i|.
  Rational lambda_star;
  // Absent when no nonempty piece exists.
  std::optional<PieceWitness> witness;
};

// Exact maximal pieces via a suffix array over the doubled words
// r r and r^-1 r^-1 of every relator.  Throws on an empty relator list or
// an invalid presentation.
PieceReport piece_report(Presentation const& p);

struct SmallCancellationVerdict {
  Rational lambda;
  bool holds = false;
};

// C'(lambda): every piece u occurring in a relator r has |u| < lambda |r|.
// Requires lambda in (0, 1].
SmallCancellationVerdict is_c_prime(Presentation const& p,
                                    Rational const& lambda);
SmallCancellationVerdict is_c_prime(Presentation const& p,
                                    PieceReport const& report,
                                    Rational const& lambda);

// Same test for a real threshold (used for lambda that depends on l through
// logarithms, where equality cannot occur).
bool is_c_prime_real(Presentation const& p, PieceReport const& report,
                     double lambda);

// Dehn's algorithm for a C'(1/6) presentation.  The constructor verifies
// the hypothesis once; reduce() and is_trivial() are then read-only.
class DehnReducer {
 public:
  explicit DehnReducer(Presentation p);

  // Freely reduces, then repeatedly replaces the leftmost-longest subword u
  // that is more than half of a conjugate c = u v of some r^(+-1) by v^-1,
  // ties going to the lowest (relator, sign, shift).
  Word reduce(Word const& w) const;

  bool is_trivial(Word const& w) const { return reduce(w).empty(); }

  Presentation const& presentation() const noexcept { return p_; }

 private:
  struct Entry {
    ConjugateIndex index;
    Word word;
  };

  Presentation p_;
  // Conjugates bucketed by first letter code, each bucket in index order.
  std::vector<std::vector<Entry>> by_first_;
};

Word dehn_reduce(Word const& w, Presentation const& p);
bool is_trivial(Word const& w, Presentation const& p);

}  // namespace randgrp
