#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "randgrp/counting.hpp"
#include "randgrp/presentation.hpp"
#include "randgrp/rational.hpp"

namespace randgrp {

struct PresentationStats {
  int m = 2;                 // generators
  std::size_t M = 0;         // longest relator
  std::size_t min_r = 0;     // shortest relator
  Rational lambda_star{0};   // optimal small cancellation ratio
  std::size_t m_star = 0;    // subword coverage length
};

// Runs the piece and coverage analyses.
PresentationStats stats_of(Presentation const& p);

// The lambda the upper bound formulas use: lambda_star, or 1/6 when
// lambda_star is 0.
Rational effective_lambda(PresentationStats const& s);

// M log(2m-1) / (2 log floor(1/lambda - 4)).  Throws PreconditionError
// unless lambda <= 1/6.
double upper_bound(PresentationStats const& s);

// -(4/M^2) log^2 floor(1/lambda - 4), same preconditions.
double asymptotic_curvature(PresentationStats const& s);

struct LowerBound {
  double lower_exact = 0;    // 1 + log|T| / log M
  double lower_fixed_c = 0;  // 1 + (1/100) log(2m) M* / log M
  std::int64_t K = 0;        // floor(M*/2 - 3)
  BigInt T_size;             // 3 (2m-2)^(K-3)
  Rational delta_used;       // largest i/1024 meeting the hypotheses
};

// Requires M* >= 12 and some delta = i/1024 in (0, 1/8) with
// lambda_star < 1/8 - delta and min_r >= 3/delta.  The exception message
// names the violated clause.
LowerBound lower_bound(PresentationStats const& s);

// log(2m-1) / epsilon.
double entropy_upper(int m, double epsilon);

// 16 log(2m-1) l / (log 2 (1 - 2d)), 0 < d < 1/2.
double density_upper(int m, double d, std::int64_t l);

// A bound value or the reason it could not be produced.
struct BoundValue {
  std::optional<double> value;
  std::string failure;
};

struct HeadlineFormula {
  std::string model;
  std::string lower;   // symbolic, with the theorem's constant C
  std::string upper;
  double lower_at_c1;  // both sides evaluated at C = 1, for scale only
  double upper_at_c1;
};

struct DensityParams {
  double d = 0;
  std::int64_t l = 0;
};

struct BoundsReport {
  PresentationStats stats;
  Rational lambda_used;
  bool lambda_defaulted = false;
  BoundValue upper;
  BoundValue kappa;
  std::optional<LowerBound> lower;
  std::string lower_failure;
  BoundValue entropy_upper;  // epsilon = log 2 / (4 * 2M)
  BoundValue density_upper;  // only when density parameters are given
  std::vector<HeadlineFormula> headline;
  std::vector<std::string> notes;
};

BoundsReport bounds_report(PresentationStats const& s,
                           std::optional<DensityParams> density = {});

}  // namespace randgrp
