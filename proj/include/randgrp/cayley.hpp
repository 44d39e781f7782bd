#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "randgrp/cancellation.hpp"
#include "randgrp/rng.hpp"

namespace randgrp {

// Largest (2m-1)^radius a ball may be asked for.
inline constexpr std::uint64_t kBallGuard = 1'000'000;

// The ball of the given radius about the identity in the Cayley graph of a
// C'(1/6) presentation.  Vertices are numbered in BFS order and named by
// their shortlex-least geodesic word; equality of group elements is decided
// by Dehn's algorithm.
class CayleyBall {
 public:
  CayleyBall(Presentation const& p, int radius);

  int radius() const noexcept { return radius_; }
  int generators() const noexcept { return m_; }
  std::size_t size() const noexcept { return words_.size(); }
  Word const& word(std::size_t v) const { return words_[v]; }
  int distance(std::size_t v) const { return dist_[v]; }
  // Vertex reached from v along the letter with this code, or -1 when that
  // element lies outside the ball.
  std::int32_t neighbor(std::size_t v, std::uint32_t code) const {
    return next_[v * static_cast<std::size_t>(2 * m_) + code];
  }
  // Number of vertices at each distance 0..radius.
  std::vector<std::size_t> level_sizes() const;
  // Vertex reached by reading w from the identity, if the path stays inside.
  std::optional<std::size_t> follow(Word const& w) const;
  DehnReducer const& reducer() const noexcept { return dehn_; }

  // Graph distances from the given sources inside the ball (-1 unreachable).
  std::vector<int> bfs(std::vector<std::size_t> const& sources) const;

 private:
  using Key = std::vector<std::int64_t>;
  Key key_of(Word const& w) const;

  DehnReducer dehn_;
  int m_;
  int radius_;
  std::vector<Key> lattice_;  // echelon basis of relator exponent vectors
  std::vector<Word> words_;
  std::vector<int> dist_;
  std::vector<std::int32_t> next_;
};

struct SlimnessResult {
  int sides = 0;
  std::vector<int> per_sample;  // slimness of each sampled polygon
  int max = 0;
};

// Samples geodesic polygons with `sides` corners drawn uniformly from the
// ball of radius floor(R/2), so every geodesic between corners stays inside
// the ball.  Each side is a uniformly random step-by-step geodesic.  The
// slimness of a polygon is the largest distance from a point of one side to
// the union of the others, measured in the ball graph (never an
// underestimate).  Sample i draws from subseed(seed, {sides, i}).
SlimnessResult measure_slimness(CayleyBall const& ball, int samples, int sides,
                                std::uint64_t seed);

// Slimness of one polygon given its corners.
int polygon_slimness(CayleyBall const& ball,
                     std::vector<std::size_t> const& corners, Rng& rng);

struct SlimnessTrend {
  double slope = 0.0;  // M / (2 log floor(1/lambda - 4))
  double fitted_c = 0.0;  // max(0, max_n(Delta(n) - slope log n))
  std::vector<SlimnessResult> results;
};

// Fits the additive constant in Delta(n) <= slope log n + C over the given
// polygon sizes.
SlimnessTrend slimness_trend(CayleyBall const& ball, Rational const& lambda,
                             std::size_t max_relator_length,
                             std::vector<int> const& sides, int samples,
                             std::uint64_t seed);

}  // namespace randgrp
