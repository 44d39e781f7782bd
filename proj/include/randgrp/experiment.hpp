#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "randgrp/presentation.hpp"
#include "randgrp/rational.hpp"

namespace randgrp {

inline constexpr std::int64_t kTrialRelatorCap = 100'000;
inline constexpr std::int64_t kTrialLetterCap = 10'000'000;

struct ModelSpec {
  enum class Kind { few_relator, density };
  Kind kind = Kind::few_relator;
  int m = 2;
  int n = 1;           // few_relator: relator count
  Rational d{1, 10};   // density
};

// Measurement keys:
//   lambda_star          the optimal ratio, exact
//   m_star               subword coverage length
//   c_prime_at(<expr>)   C'(lambda) verdict, lambda an expression in l, m, n, d
//   covers_length(<expr>) every reduced word of that length occurs
//   bounds               the bound formulas, one row each
struct ExperimentConfig {
  ModelSpec model;
  std::vector<int> lengths;
  int trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> measurements;
};

struct Row {
  int l = 0;
  int trial = 0;
  std::string measurement;
  std::string value;  // "true"/"false", an integer, "p/q", a real, or "failed"

  friend bool operator==(Row const&, Row const&) = default;
};

struct Aggregate {
  int l = 0;
  std::string measurement;
  int trials = 0;
  // Verdict measurements.
  std::optional<std::int64_t> successes;
  std::optional<Rational> fraction;
  double wilson_low = 0;   // 95% Wilson score interval
  double wilson_high = 0;
  // Numeric measurements (failed rows excluded).
  std::optional<double> mean;
  std::optional<double> min;
  std::optional<double> max;
  int failed = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<Row> rows;  // ordered by (l, trial), measurements in config order
  std::vector<Aggregate> aggregates;
  std::map<std::string, std::string> metadata;
};

// Throws PreconditionError on an invalid config, an unknown measurement or
// a trial that would exceed the relator or letter caps.
void validate_config(ExperimentConfig const& cfg);

// The presentation of trial `trial` at length l: the sampler is seeded with
// subseed(seed, {l, trial}).
Presentation sample_trial(ExperimentConfig const& cfg, int l, int trial);

// Runs all (l, trial) pairs, concurrently when RANDGRP_THREADS allows; the
// result does not depend on the thread count.
ExperimentResult run_experiment(ExperimentConfig const& cfg);

// Recomputes aggregates from rows.
std::vector<Aggregate> aggregate_rows(ExperimentConfig const& cfg,
                                      std::vector<Row> const& rows);

// Wilson score interval for k successes in n trials at z = 1.96.
std::pair<double, double> wilson_interval(std::int64_t k, std::int64_t n);

struct CoverageReference {
  int l = 0;
  int k = 0;
  Rational covered_fraction;
  Rational miss_fraction;
  // min(1, (4/3)(2m-1)^k * omission_bound^n): analytic chance that some
  // length-k word is missed, when the omission bound applies.
  std::optional<double> miss_bound;
  std::string bound_failure;
  double standard_error = 0;  // binomial, at the bound
  bool within_bound = true;   // miss_fraction <= miss_bound + 3 se
};

struct CoverageExperiment {
  ExperimentResult result;
  std::vector<CoverageReference> reference;
};

// Coverage of all reduced words of length k(l) (an expression in l, m, n,
// d), with the analytic reference at every length.
CoverageExperiment coverage_experiment(ModelSpec const& model,
                                       std::vector<int> const& lengths,
                                       std::string const& k_expr, int trials,
                                       std::uint64_t seed);

struct OmissionFrequency {
  int m = 2;
  int l = 0;
  Word word;
  int trials = 0;
  std::int64_t omitted = 0;
  double frequency = 0;
  double bound = 0;           // omission_bound(m, l, |word|)
  double standard_error = 0;  // binomial, at the bound
  bool within_bound = false;  // frequency <= bound + 3 se
};

// Fraction of uniform cyclically reduced words of length l in which `word`
// does not occur as a subword.  Trial i draws from subseed(seed, {l, i}).
OmissionFrequency omission_frequency(int m, int l, Word const& word,
                                     int trials, std::uint64_t seed);

}  // namespace randgrp
