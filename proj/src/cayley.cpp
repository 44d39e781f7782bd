#include "randgrp/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "randgrp/error.hpp"
#include "randgrp/parallel.hpp"

namespace randgrp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

// Row echelon form over the integers with positive pivots.
std::vector<std::vector<std::int64_t>> echelon(
    std::vector<std::vector<std::int64_t>> rows, int width) {
  std::vector<std::vector<std::int64_t>> out;
  for (int col = 0; col < width && !rows.empty(); ++col) {
    // Euclid down the column until one row is left with a nonzero entry.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (pivot == rows.size() ||
             std::abs(rows[i][col]) < std::abs(rows[pivot][col]))) {
          pivot = i;
        }
      }
      if (pivot == rows.size()) {
        break;
      }
      bool others = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i][col] == 0) {
          continue;
        }
        std::int64_t q = rows[i][col] / rows[pivot][col];
        for (int k = 0; k < width; ++k) {
          rows[i][k] -= q * rows[pivot][k];
        }
        others = others || rows[i][col] != 0;
      }
      if (!others) {
        auto row = rows[pivot];
        if (row[col] < 0) {
          for (auto& x : row) {
            x = -x;
          }
        }
        out.push_back(std::move(row));
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
    }
    std::erase_if(rows, [&](auto const& r) {
      return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
    });
  }
  return out;
}

}  // namespace

CayleyBall::CayleyBall(Presentation const& p, int radius)
    : dehn_(p), m_(p.generators), radius_(radius) {
  if (radius < 0) {
    throw PreconditionError("ball radius must be nonnegative");
  }
  double const growth = static_cast<double>(radius) * std::log(2.0 * m_ - 1.0);
  if (growth > std::log(static_cast<double>(kBallGuard)) + 1e-9) {
    throw PreconditionError("ball too large: (2m-1)^radius exceeds " +
                            std::to_string(kBallGuard));
  }

  std::vector<std::vector<std::int64_t>> rows;
  for (Word const& r : p.relators) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(m_), 0);
    for (Letter x : r) {
      e[static_cast<std::size_t>(x.generator() - 1)] += x.sign();
    }
    rows.push_back(std::move(e));
  }
  lattice_ = echelon(std::move(rows), m_);

  std::size_t const deg = static_cast<std::size_t>(2 * m_);
  std::map<Key, std::vector<std::int32_t>> buckets;
  auto add = [&](Word w, int d) {
    auto id = static_cast<std::int32_t>(words_.size());
    buckets[key_of(w)].push_back(id);
    words_.push_back(std::move(w));
    dist_.push_back(d);
    next_.resize(next_.size() + deg, -1);
    return id;
  };
  // Finds a vertex equal to w in the group among distances >= min_dist.
  auto find = [&](Word const& w, int min_dist) -> std::int32_t {
    auto it = buckets.find(key_of(w));
    if (it == buckets.end()) {
      return -1;
    }
    for (std::int32_t u : it->second) {
      if (dist_[static_cast<std::size_t>(u)] >= min_dist &&
          dehn_.is_trivial(w * inverse(words_[static_cast<std::size_t>(u)]))) {
        return u;
      }
    }
    return -1;
  };

  add(Word(), 0);
  std::size_t level_begin = 0;
  for (int d = 0; d <= radius; ++d) {
    std::size_t const level_end = words_.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (std::uint32_t c = 0; c < deg; ++c) {
        if (next_[v * deg + c] != -1) {
          continue;
        }
        Word const w = reduce(words_[v] * Word{Letter::from_code(c)});
        std::int32_t u = find(w, d - 1);
        if (u == -1 && d < radius) {
          u = add(w, d + 1);
        }
        if (u != -1) {
          next_[v * deg + c] = u;
          next_[static_cast<std::size_t>(u) * deg + (c ^ 1u)] =
              static_cast<std::int32_t>(v);
        }
      }
    }
    level_begin = level_end;
  }
}

CayleyBall::Key CayleyBall::key_of(Word const& w) const {
  Key v(static_cast<std::size_t>(m_), 0);
  for (Letter x : w) {
    v[static_cast<std::size_t>(x.generator() - 1)] += x.sign();
  }
  for (auto const& row : lattice_) {
    std::size_t col = 0;
    while (row[col] == 0) {
      ++col;
    }
    std::int64_t q = floor_div(v[col], row[col]);
    for (std::size_t k = col; k < v.size(); ++k) {
      v[k] -= q * row[k];
    }
  }
  return v;
}

std::vector<std::size_t> CayleyBall::level_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (int d : dist_) {
    ++out[static_cast<std::size_t>(d)];
  }
  return out;
}

std::optional<std::size_t> CayleyBall::follow(Word const& w) const {
  std::size_t v = 0;
  for (Letter x : w) {
    if (x.generator() > m_) {
      throw PreconditionError("word " + w.to_string() +
                              " uses a generator outside the presentation");
    }
    std::int32_t u = neighbor(v, x.code());
    if (u < 0) {
      return std::nullopt;
    }
    v = static_cast<std::size_t>(u);
  }
  return v;
}

std::vector<int> CayleyBall::bfs(std::vector<std::size_t> const& sources) const {
  std::vector<int> d(size(), -1);
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    if (d[s] != 0) {
      d[s] = 0;
      queue.push_back(s);
    }
  }
  std::size_t const deg = static_cast<std::size_t>(2 * m_);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < deg; ++c) {
      std::int32_t u = next_[v * deg + c];
      if (u >= 0 && d[static_cast<std::size_t>(u)] < 0) {
        d[static_cast<std::size_t>(u)] = d[v] + 1;
        queue.push_back(static_cast<std::size_t>(u));
      }
    }
  }
  return d;
}

namespace {

// Random geodesic from x to y, as the list of vertices visited.
std::vector<std::size_t> random_geodesic(CayleyBall const& ball,
                                         std::size_t x, std::size_t y,
                                         Rng& rng) {
  std::vector<int> const to_y = ball.bfs({y});
  if (to_y[x] < 0) {
    throw PreconditionError("polygon corners are not connected in the ball");
  }
  std::vector<std::size_t> path{x};
  std::size_t const deg = static_cast<std::size_t>(2 * ball.generators());
  std::vector<std::size_t> options;
  while (path.back() != y) {
    std::size_t v = path.back();
    options.clear();
    for (std::uint32_t c = 0; c < deg; ++c) {
      std::int32_t u = ball.neighbor(v, c);
      if (u >= 0 && to_y[static_cast<std::size_t>(u)] == to_y[v] - 1) {
        options.push_back(static_cast<std::size_t>(u));
      }
    }
    path.push_back(options[uniform_below(rng, options.size())]);
  }
  return path;
}

}  // namespace

int polygon_slimness(CayleyBall const& ball,
                     std::vector<std::size_t> const& corners, Rng& rng) {
  std::size_t const n = corners.size();
  if (n < 2) {
    return 0;
  }
  std::vector<std::vector<std::size_t>> sides;
  for (std::size_t i = 0; i < n; ++i) {
    sides.push_back(random_geodesic(ball, corners[i], corners[(i + 1) % n], rng));
  }
  int slim = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) {
        others.insert(others.end(), sides[j].begin(), sides[j].end());
      }
    }
    std::vector<int> const d = ball.bfs(others);
    for (std::size_t v : sides[i]) {
      slim = std::max(slim, d[v]);
    }
  }
  return slim;
}

SlimnessResult measure_slimness(CayleyBall const& ball, int samples, int sides,
                                std::uint64_t seed) {
  if (samples < 1) {
    throw PreconditionError("slimness needs at least one sample");
  }
  if (sides < 2) {
    throw PreconditionError("a polygon needs at least 2 sides");
  }
  // Corners come from the half-radius ball, which is an initial segment of
  // the BFS numbering.
  std::size_t inner = 0;
  while (inner < ball.size() && ball.distance(inner) <= ball.radius() / 2) {
    ++inner;
  }
  SlimnessResult out;
  out.sides = sides;
  out.per_sample.assign(static_cast<std::size_t>(samples), 0);
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Rng rng(subseed(seed, {static_cast<std::uint64_t>(sides), i}));
    std::vector<std::size_t> corners;
    for (int k = 0; k < sides; ++k) {
      corners.push_back(static_cast<std::size_t>(uniform_below(rng, inner)));
    }
    out.per_sample[i] = polygon_slimness(ball, corners, rng);
  });
  out.max = *std::max_element(out.per_sample.begin(), out.per_sample.end());
  return out;
}

SlimnessTrend slimness_trend(CayleyBall const& ball, Rational const& lambda,
                             std::size_t max_relator_length,
                             std::vector<int> const& sides, int samples,
                             std::uint64_t seed) {
  if (!(lambda > Rational(0)) || lambda > Rational(1, 6)) {
    throw PreconditionError("slimness trend needs 0 < lambda <= 1/6");
  }
  std::int64_t const f = (Rational(1) / lambda - Rational(4)).floor();
  SlimnessTrend out;
  out.slope = static_cast<double>(max_relator_length) /
              (2.0 * std::log(static_cast<double>(f)));
  for (int n : sides) {
    SlimnessResult r = measure_slimness(ball, samples, n, seed);
    out.fitted_c = std::max(out.fitted_c, r.max - out.slope * std::log(n));
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace randgrp
