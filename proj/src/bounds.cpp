#include "randgrp/bounds.hpp"

#include <cmath>

#include "randgrp/cancellation.hpp"
#include "randgrp/coverage.hpp"
#include "randgrp/error.hpp"

namespace randgrp {

PresentationStats stats_of(Presentation const& p) {
  PresentationStats s;
  s.m = p.generators;
  s.M = p.max_relator_length();
  s.min_r = p.min_relator_length();
  if (!p.relators.empty()) {
    s.lambda_star = piece_report(p).lambda_star;
    s.m_star = m_star(p).m_star;
  }
  return s;
}

Rational effective_lambda(PresentationStats const& s) {
  return s.lambda_star > Rational(0) ? s.lambda_star : Rational(1, 6);
}

namespace {

// floor(1/lambda - 4) after checking the shared hypotheses.
std::int64_t checked_floor(PresentationStats const& s) {
  if (s.m < 2) {
    throw PreconditionError("bounds need m >= 2");
  }
  if (s.M < 1) {
    throw PreconditionError("bounds need a nonempty relator");
  }
  Rational const lambda = effective_lambda(s);
  if (lambda > Rational(1, 6)) {
    throw PreconditionError("lambda = " + lambda.to_string() +
                            " exceeds 1/6");
  }
  std::int64_t const f = (Rational(1) / lambda - Rational(4)).floor();
  if (f < 2) {
    throw PreconditionError("floor(1/lambda - 4) < 2");
  }
  return f;
}

}  // namespace

double upper_bound(PresentationStats const& s) {
  double const f = static_cast<double>(checked_floor(s));
  return static_cast<double>(s.M) * std::log(2.0 * s.m - 1.0) /
         (2.0 * std::log(f));
}

double asymptotic_curvature(PresentationStats const& s) {
  double const lf = std::log(static_cast<double>(checked_floor(s)));
  double const M = static_cast<double>(s.M);
  return -(4.0 / (M * M)) * lf * lf;
}

LowerBound lower_bound(PresentationStats const& s) {
  if (s.m < 2) {
    throw PreconditionError("lower bound needs m >= 2");
  }
  if (s.m_star < 12) {
    throw PreconditionError("M* >= 12 violated (M* = " +
                            std::to_string(s.m_star) + ")");
  }
  std::optional<Rational> delta;
  bool some_c_prime = false;
  for (std::int64_t i = 127; i >= 1; --i) {
    Rational const d(i, 1024);
    if (!(s.lambda_star < Rational(1, 8) - d)) {
      continue;
    }
    some_c_prime = true;
    // min_r >= 3/delta  <=>  min_r * i >= 3 * 1024
    if (static_cast<std::int64_t>(s.min_r) * i >= 3 * 1024) {
      delta = d;
      break;
    }
  }
  if (!some_c_prime) {
    throw PreconditionError("C'(1/8 - delta) violated for every delta = i/1024"
                            " (lambda* = " + s.lambda_star.to_string() + ")");
  }
  if (!delta) {
    throw PreconditionError("|r| >= 3/delta violated for every admissible delta"
                            " (min |r| = " + std::to_string(s.min_r) + ")");
  }

  LowerBound out;
  out.delta_used = *delta;
  out.K = static_cast<std::int64_t>(s.m_star) / 2 - 3;
  out.T_size = 3 * boost::multiprecision::pow(
                       BigInt(2 * s.m - 2), static_cast<unsigned>(out.K - 3));
  double const logM = std::log(static_cast<double>(s.M));
  double const logT = std::log(3.0) + static_cast<double>(out.K - 3) *
                                          std::log(2.0 * s.m - 2.0);
  out.lower_exact = 1.0 + logT / logM;
  out.lower_fixed_c = 1.0 + 0.01 * std::log(2.0 * s.m) *
                                static_cast<double>(s.m_star) / logM;
  return out;
}

double entropy_upper(int m, double epsilon) {
  if (m < 2) {
    throw PreconditionError("entropy bound needs m >= 2");
  }
  if (!(epsilon > 0.0)) {
    throw PreconditionError("visual parameter epsilon must be positive");
  }
  return std::log(2.0 * m - 1.0) / epsilon;
}

double density_upper(int m, double d, std::int64_t l) {
  if (m < 2) {
    throw PreconditionError("density bound needs m >= 2");
  }
  if (!(d > 0.0) || !(d < 0.5)) {
    throw PreconditionError("density bound needs 0 < d < 1/2, got d = " +
                            std::to_string(d));
  }
  return 16.0 * std::log(2.0 * m - 1.0) * static_cast<double>(l) /
         (std::log(2.0) * (1.0 - 2.0 * d));
}

namespace {

template <typename F>
BoundValue attempt(F&& f) {
  try {
    return {f(), {}};
  } catch (PreconditionError const& e) {
    return {std::nullopt, std::string("precondition failed: ") + e.what()};
  }
}

}  // namespace

BoundsReport bounds_report(PresentationStats const& s,
                           std::optional<DensityParams> density) {
  BoundsReport r;
  r.stats = s;
  r.lambda_used = effective_lambda(s);
  r.lambda_defaulted = !(s.lambda_star > Rational(0));
  if (r.lambda_defaulted) {
    r.notes.push_back("lambda* = 0; upper bound formulas use lambda = 1/6");
  }
  r.upper = attempt([&] { return upper_bound(s); });
  r.kappa = attempt([&] { return asymptotic_curvature(s); });
  try {
    r.lower = lower_bound(s);
  } catch (PreconditionError const& e) {
    r.lower_failure = std::string("precondition failed: ") + e.what();
  }
  double const M = static_cast<double>(s.M);
  // epsilon = log 2 / (4 delta) with delta = 2M.
  r.entropy_upper = attempt([&] {
    if (s.M < 1) {
      throw PreconditionError("entropy bound needs a nonempty relator");
    }
    return entropy_upper(s.m, std::log(2.0) / (8.0 * M));
  });
  if (density) {
    r.density_upper =
        attempt([&] { return density_upper(s.m, density->d, density->l); });
  }

  double const lb = std::log(2.0 * s.m - 1.0);
  if (s.M >= 2) {
    r.headline.push_back(
        {"few_relator", "1 + 1/C", "C log(2m-1) l / log(l)", 2.0,
         lb * M / std::log(M)});
    if (density && density->d > 0.0 && density->d < 1.0) {
      double const d = density->d;
      double const l = static_cast<double>(density->l);
      r.headline.push_back(
          {"density", "1 + (d log(2m) / C) l / log(l)",
           "C log(2m-1) l / |log(d)|",
           1.0 + d * std::log(2.0 * s.m) * l / std::log(l),
           lb * l / std::abs(std::log(d))});
    }
    r.notes.push_back(
        "headline formulas hold up to the theorem's unspecified constant C; "
        "values shown at C = 1 for scale only");
  }
  return r;
}

}  // namespace randgrp
