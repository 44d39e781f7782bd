#pragma once

// Slow, obviously-correct reference computations shared by the unit tests
// and the acceptance suite.  None of these call into the code they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "randgrp/presentation.hpp"

namespace randgrp::test {

// Letters as plain codes 0..2m-1; code ^ 1 is the inverse.
using Codes = std::vector<int>;

inline bool codes_reduced(Codes const& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == (w[i - 1] ^ 1)) {
      return false;
    }
  }
  return true;
}

inline bool codes_cyclically_reduced(Codes const& w) {
  return codes_reduced(w) && (w.size() < 2 || w.front() != (w.back() ^ 1));
}

// Every word of length l over 2m letters, in lexicographic code order.
template <typename F>
void for_each_word(int m, int l, F&& f) {
  Codes w(static_cast<std::size_t>(l), 0);
  for (;;) {
    f(w);
    int i = l - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == 2 * m - 1) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) {
      return;
    }
    ++w[static_cast<std::size_t>(i)];
  }
}

inline std::vector<Codes> all_reduced(int m, int l) {
  std::vector<Codes> out;
  for_each_word(m, l, [&](Codes const& w) {
    if (codes_reduced(w)) {
      out.push_back(w);
    }
  });
  return out;
}

inline std::uint64_t brute_cyclically_reduced(int m, int l) {
  std::uint64_t n = 0;
  for_each_word(m, l, [&](Codes const& w) { n += codes_cyclically_reduced(w); });
  return n;
}

inline Word to_word(Codes const& c) {
  std::vector<Letter> out;
  for (int x : c) {
    out.push_back(Letter::from_code(static_cast<std::uint32_t>(x)));
  }
  return Word(std::move(out));
}

inline Codes to_codes(Word const& w) {
  Codes out;
  for (Letter x : w) {
    out.push_back(static_cast<int>(x.code()));
  }
  return out;
}

inline Codes codes_inverse(Codes const& w) {
  Codes out(w.rbegin(), w.rend());
  for (int& x : out) {
    x ^= 1;
  }
  return out;
}

inline Codes codes_rotate(Codes const& w, std::size_t s) {
  Codes out(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
  return out;
}

struct OraclePieces {
  std::vector<std::size_t> max_piece;
  std::int64_t num = 0;  // lambda_star = num / den, not normalized
  std::int64_t den = 1;
};

// Pairwise longest common prefix over every pair of distinct conjugates.
inline OraclePieces quadratic_pieces(Presentation const& p) {
  struct Conj {
    std::size_t relator;
    Codes word;
  };
  std::vector<Conj> conj;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Codes const r = to_codes(p.relators[i]);
    for (Codes const& base : {r, codes_inverse(r)}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        conj.push_back({i, codes_rotate(base, s)});
      }
    }
  }
  OraclePieces out;
  out.max_piece.assign(p.relators.size(), 0);
  for (std::size_t a = 0; a < conj.size(); ++a) {
    for (std::size_t b = 0; b < conj.size(); ++b) {
      if (a == b) {
        continue;
      }
      auto const& u = conj[a].word;
      auto const& v = conj[b].word;
      std::size_t k = 0;
      while (k < u.size() && k < v.size() && u[k] == v[k]) {
        ++k;
      }
      auto& best = out.max_piece[conj[a].relator];
      best = std::max(best, k);
    }
  }
  out.num = 0;
  out.den = 1;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto const L = static_cast<std::int64_t>(p.relators[i].size());
    auto const k = static_cast<std::int64_t>(out.max_piece[i]);
    if (k * out.den > out.num * L) {
      out.num = k;
      out.den = L;
    }
  }
  return out;
}

// Distinct reduced words of length k found by cutting every cyclic
// conjugate of every relator^(+-1) explicitly.
inline std::set<Codes> brute_factors(Presentation const& p, std::size_t k) {
  std::set<Codes> out;
  for (Word const& r : p.relators) {
    Codes const c = to_codes(r);
    for (Codes const& base : {c, codes_inverse(c)}) {
      if (base.size() < k) {
        continue;
      }
      for (std::size_t s = 0; s < base.size(); ++s) {
        Codes const rot = codes_rotate(base, s);
        out.insert(Codes(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(k)));
      }
    }
  }
  return out;
}

inline std::size_t brute_m_star(Presentation const& p) {
  std::size_t k = 0;
  for (;;) {
    std::size_t next = k + 1;
    std::size_t needed = all_reduced(p.generators, static_cast<int>(next)).size();
    if (brute_factors(p, next).size() != needed) {
      return k;
    }
    k = next;
  }
}

// The genus-2 surface group acting on the Poincare disc by the side
// pairings of the regular octagon with interior angles pi/4.  Matrices in
// SU(1,1); the representation is faithful, so two words are equal in the
// group iff their matrices agree up to sign.
class SurfaceGroupMatrices {
 public:
  using C = std::complex<double>;
  using M = std::array<C, 4>;  // row major

  SurfaceGroupMatrices() {
    double const d = std::acosh(1.0 + std::sqrt(2.0));
    double const pi = std::acos(-1.0);
    auto rot = [](double t) {
      return M{std::polar(1.0, t / 2), 0.0, 0.0, std::polar(1.0, -t / 2)};
    };
    M const shift{std::cosh(d), std::sinh(d), std::sinh(d), std::cosh(d)};
    // Side k has its midpoint at angle k pi/4; pair side k with side j.
    auto pairing = [&](int k, int j) {
      return mul(rot(j * pi / 4), mul(shift, rot(pi - k * pi / 4)));
    };
    std::array<M, 4> const g{pairing(0, 2), pairing(1, 3), pairing(4, 6),
                             pairing(5, 7)};
    // Assign generators a, b, c, d to the pairings (each possibly inverted)
    // so that abABcdCD is the identity.
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (int signs = 0; signs < 16; ++signs) {
        for (int i = 0; i < 4; ++i) {
          M const& x = g[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          gens_[static_cast<std::size_t>(2 * i)] = (signs >> i & 1) ? inv(x) : x;
          gens_[static_cast<std::size_t>(2 * i + 1)] =
              (signs >> i & 1) ? x : inv(x);
        }
        if (is_identity(eval(Codes{0, 2, 1, 3, 4, 6, 5, 7}))) {
          found_ = true;
          return;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool found() const { return found_; }

  M eval(Codes const& w) const {
    M acc{1.0, 0.0, 0.0, 1.0};
    for (int x : w) {
      acc = mul(acc, gens_[static_cast<std::size_t>(x)]);
    }
    return acc;
  }

  static bool is_identity(M const& x) {
    double scale = 0;
    for (auto const& e : x) {
      scale = std::max(scale, std::abs(e));
    }
    double const tol = 1e-9 * std::max(1.0, scale);
    auto near = [&](C a, C b) { return std::abs(a - b) <= tol; };
    return (near(x[0], 1.0) && near(x[1], 0.0) && near(x[2], 0.0) &&
            near(x[3], 1.0)) ||
           (near(x[0], -1.0) && near(x[1], 0.0) && near(x[2], 0.0) &&
            near(x[3], -1.0));
  }

  bool equal(Codes const& u, Codes const& v) const {
    Codes w = u;
    Codes const vi = codes_inverse(v);
    w.insert(w.end(), vi.begin(), vi.end());
    return is_identity(eval(w));
  }

 private:
  static M mul(M const& x, M const& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  }
  static M inv(M const& x) { return {x[3], -x[1], -x[2], x[0]}; }

  std::array<M, 8> gens_{};
  bool found_ = false;
};

}  // namespace randgrp::test
