#include "randgrp/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "randgrp/suffix_array.hpp"

namespace randgrp {

Word conjugate_word(Presentation const& p, ConjugateIndex const& c) {
  if (c.relator >= p.relators.size()) {
    throw PreconditionError("conjugate index names relator " +
                            std::to_string(c.relator) + " of " +
                            std::to_string(p.relators.size()));
  }
  Word const& r = p.relators[c.relator];
  if (c.shift >= r.size()) {
    throw PreconditionError("conjugate shift out of range");
  }
  return rotate(c.sign > 0 ? r : inverse(r), c.shift);
}

namespace {

using Index = std::int32_t;

struct Block {
  std::size_t relator;
  int sign;
  Index start;
  Index length;  // relator length L; the block holds 2L-1 letters
};

}  // namespace

PieceReport piece_report(Presentation const& p) {
  if (p.relators.empty()) {
    throw PreconditionError("piece_report: presentation has no relators");
  }
  p.validate();

  std::size_t total = 0;
  for (Word const& r : p.relators) {
    total += 2 * (2 * r.size());
  }
  if (total >= static_cast<std::size_t>(std::numeric_limits<Index>::max())) {
    throw PreconditionError("piece_report: presentation too large");
  }

  // Text: for each relator and sign, c c[0..L-1) followed by a separator
  // unique to the block, so no common prefix runs across blocks.
  Index const alphabet = 2 * p.generators;
  std::vector<Index> text;
  text.reserve(total);
  std::vector<Block> blocks;
  blocks.reserve(2 * p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int sign : {1, -1}) {
      Word const c = sign > 0 ? p.relators[i] : inverse(p.relators[i]);
      Index const len = static_cast<Index>(c.size());
      blocks.push_back({i, sign, static_cast<Index>(text.size()), len});
      for (Letter x : c) {
        text.push_back(static_cast<Index>(x.code()));
      }
      for (Index k = 0; k + 1 < len; ++k) {
        text.push_back(static_cast<Index>(c[static_cast<std::size_t>(k)].code()));
      }
      text.push_back(alphabet + static_cast<Index>(blocks.size()) - 1);
    }
  }
  Index const n = static_cast<Index>(text.size());
  Index const upper = alphabet + static_cast<Index>(blocks.size()) - 1;

  // cap[pos] = L for suffixes that start a conjugate, 0 otherwise.
  std::vector<Index> cap(text.size(), 0);
  for (Block const& b : blocks) {
    std::fill_n(cap.begin() + b.start, b.length, b.length);
  }

  std::vector<Index> const sa = suffix_array(text, upper);
  std::vector<Index> const lcp = lcp_array(text, sa);

  // best[pos] = max over other conjugate starts t of min(lcp(pos, t), L_t),
  // computed by one sweep in each direction of the suffix array.
  std::vector<Index> best(text.size(), 0);
  std::vector<Index> partner(text.size(), -1);
  {
    Index cur = 0;
    Index arg = -1;
    for (Index k = 0; k < n; ++k) {
      if (k > 0) {
        Index prev = sa[k - 1];
        if (cap[prev] > cur) {
          cur = cap[prev];
          arg = prev;
        }
        cur = std::min(cur, lcp[k]);
      }
      best[sa[k]] = cur;
      partner[sa[k]] = arg;
    }
  }
  {
    Index cur = 0;
    Index arg = -1;
    for (Index k = n - 1; k >= 0; --k) {
      if (k + 1 < n) {
        Index next = sa[k + 1];
        if (cap[next] > cur) {
          cur = cap[next];
          arg = next;
        }
        cur = std::min(cur, lcp[k + 1]);
      }
      Index pos = sa[k];
      if (cur > best[pos]) {
        best[pos] = cur;
        partner[pos] = arg;
      }
    }
  }

  auto index_of = [&](Index pos) {
    auto it = std::upper_bound(
        blocks.begin(), blocks.end(), pos,
        [](Index v, Block const& b) { return v < b.start; });
    Block const& b = *(it - 1);
    return ConjugateIndex{b.relator, b.sign,
                          static_cast<std::size_t>(pos - b.start)};
  };

  PieceReport report;
  report.max_piece_length.assign(p.relators.size(), 0);
  std::vector<Index> argmax(p.relators.size(), -1);
  for (Block const& b : blocks) {
    for (Index h = 0; h < b.length; ++h) {
      Index pos = b.start + h;
      auto piece = static_cast<std::size_t>(std::min(best[pos], b.length));
      if (piece > report.max_piece_length[b.relator]) {
        report.max_piece_length[b.relator] = piece;
        argmax[b.relator] = pos;
      }
    }
  }

  std::optional<std::size_t> top;
  report.lambda_star = Rational(0);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Rational ratio(static_cast<std::int64_t>(report.max_piece_length[i]),
                   static_cast<std::int64_t>(p.relators[i].size()));
    if (ratio > report.lambda_star) {
      report.lambda_star = ratio;
      top = i;
    }
  }
  if (top) {
    Index pos = argmax[*top];
    PieceWitness w;
    w.first = index_of(pos);
    w.second = index_of(partner[pos]);
    w.piece = conjugate_word(p, w.first).subword(0, report.max_piece_length[*top]);
    report.witness = std::move(w);
  }
  return report;
}

namespace {

void check_lambda(Rational const& lambda) {
  if (!(lambda > Rational(0)) || lambda > Rational(1)) {
    throw PreconditionError("C'(lambda) needs lambda in (0, 1], got " +
                            lambda.to_string());
  }
}

}  // namespace

SmallCancellationVerdict is_c_prime(Presentation const& p,
                                    PieceReport const& report,
                                    Rational const& lambda) {
  check_lambda(lambda);
  bool holds = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    __int128 lhs = static_cast<__int128>(report.max_piece_length[i]) *
                   lambda.den();
    __int128 rhs = static_cast<__int128>(lambda.num()) *
                   static_cast<__int128>(p.relators[i].size());
    if (!(lhs < rhs)) {
      holds = false;
      break;
    }
  }
  return {lambda, holds};
}

SmallCancellationVerdict is_c_prime(Presentation const& p,
                                    Rational const& lambda) {
  check_lambda(lambda);
  return is_c_prime(p, piece_report(p), lambda);
}

bool is_c_prime_real(Presentation const& p, PieceReport const& report,
                     double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw PreconditionError("C'(lambda) needs lambda in (0, 1], got " +
                            std::to_string(lambda));
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!(static_cast<double>(report.max_piece_length[i]) <
          lambda * static_cast<double>(p.relators[i].size()))) {
      return false;
    }
  }
  return true;
}

DehnReducer::DehnReducer(Presentation p) : p_(std::move(p)) {
  if (p_.relators.empty()) {
    throw PreconditionError("Dehn's algorithm needs at least one relator");
  }
  if (!is_c_prime(p_, Rational(1, 6)).holds) {
    throw PreconditionError(
        "Dehn's algorithm needs a C'(1/6) presentation");
  }
  by_first_.resize(static_cast<std::size_t>(2 * p_.generators));
  for (std::size_t i = 0; i < p_.relators.size(); ++i) {
    for (int sign : {-1, 1}) {
      for (std::size_t s = 0; s < p_.relators[i].size(); ++s) {
        ConjugateIndex idx{i, sign, s};
        Word c = conjugate_word(p_, idx);
        by_first_[c.front().code()].push_back({idx, std::move(c)});
      }
    }
  }
}

Word DehnReducer::reduce(Word const& input) const {
  if (input.max_generator() > p_.generators) {
    throw PreconditionError("word " + input.to_string() +
                            " uses a generator outside the presentation");
  }
  Word w = randgrp::reduce(input);
  for (;;) {
    bool replaced = false;
    for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
      Entry const* chosen = nullptr;
      std::size_t chosen_len = 0;
      for (Entry const& e : by_first_[w[i].code()]) {
        std::size_t const limit = std::min(e.word.size(), w.size() - i);
        std::size_t len = 0;
        while (len < limit && w[i + len] == e.word[len]) {
          ++len;
        }
        if (2 * len > e.word.size() && len > chosen_len) {
          chosen = &e;
          chosen_len = len;
        }
      }
      if (chosen != nullptr) {
        Word const rest = chosen->word.subword(chosen_len,
                                               chosen->word.size() - chosen_len);
        w = randgrp::reduce(w.subword(0, i) * inverse(rest) *
                            w.subword(i + chosen_len, w.size() - i - chosen_len));
        replaced = true;
      }
    }
    if (!replaced) {
      return w;
    }
  }
}

Word dehn_reduce(Word const& w, Presentation const& p) {
  return DehnReducer(p).reduce(w);
}

bool is_trivial(Word const& w, Presentation const& p) {
  return DehnReducer(p).is_trivial(w);
}

}  // namespace randgrp
