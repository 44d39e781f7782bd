#include "randgrp/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "randgrp/bounds.hpp"
#include "randgrp/cancellation.hpp"
#include "randgrp/counting.hpp"
#include "randgrp/coverage.hpp"
#include "randgrp/error.hpp"
#include "randgrp/expression.hpp"
#include "randgrp/parallel.hpp"
#include "randgrp/sampler.hpp"

namespace randgrp {

namespace {

std::string real_text(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Measurement {
  enum class Kind { lambda_star, m_star, c_prime_at, covers_length, bounds };
  Kind kind;
  std::string name;
  std::string arg;
};

Measurement parse_measurement(std::string const& key) {
  if (key == "lambda_star") {
    return {Measurement::Kind::lambda_star, key, {}};
  }
  if (key == "m_star") {
    return {Measurement::Kind::m_star, key, {}};
  }
  if (key == "bounds") {
    return {Measurement::Kind::bounds, key, {}};
  }
  auto open = key.find('(');
  if (open != std::string::npos && key.back() == ')') {
    std::string const head = key.substr(0, open);
    std::string const arg = key.substr(open + 1, key.size() - open - 2);
    if (head == "c_prime_at") {
      return {Measurement::Kind::c_prime_at, key, arg};
    }
    if (head == "covers_length") {
      return {Measurement::Kind::covers_length, key, arg};
    }
  }
  throw PreconditionError("unknown measurement '" + key + "'");
}

std::map<std::string, Value> variables(ModelSpec const& model, int l) {
  std::map<std::string, Value> vars{{"l", Rational(l)}, {"m", Rational(model.m)}};
  if (model.kind == ModelSpec::Kind::few_relator) {
    vars["n"] = Rational(model.n);
  } else {
    vars["d"] = model.d;
  }
  return vars;
}

Value lambda_at(Measurement const& ms, ModelSpec const& model, int l) {
  Value v = evaluate(ms.arg, variables(model, l));
  double const x = to_double(v);
  if (!(x > 0.0) || x > 1.0) {
    throw PreconditionError(ms.name + " gives lambda = " + real_text(x) +
                            " at l = " + std::to_string(l) +
                            ", outside (0, 1]");
  }
  return v;
}

std::size_t length_at(Measurement const& ms, ModelSpec const& model, int l) {
  Value v = evaluate(ms.arg, variables(model, l));
  auto const* r = std::get_if<Rational>(&v);
  if (r == nullptr || r->den() != 1 || r->num() < 1) {
    throw PreconditionError(ms.name + " must give a positive integer at l = " +
                            std::to_string(l) + " (use ceil or floor)");
  }
  return static_cast<std::size_t>(r->num());
}

std::vector<Row> run_trial(ExperimentConfig const& cfg,
                           std::vector<Measurement> const& ms, int l,
                           int trial) {
  Presentation const p = sample_trial(cfg, l, trial);
  std::optional<PieceReport> pieces;
  std::optional<CoverageReport> coverage;
  auto need_pieces = [&]() -> PieceReport const& {
    if (!pieces) {
      pieces = piece_report(p);
    }
    return *pieces;
  };
  auto need_coverage = [&]() -> CoverageReport const& {
    if (!coverage) {
      coverage = m_star(p);
    }
    return *coverage;
  };

  std::vector<Row> rows;
  auto emit = [&](std::string name, std::string value) {
    rows.push_back({l, trial, std::move(name), std::move(value)});
  };
  for (Measurement const& m : ms) {
    switch (m.kind) {
      case Measurement::Kind::lambda_star:
        emit(m.name, need_pieces().lambda_star.to_string());
        break;
      case Measurement::Kind::m_star:
        emit(m.name, std::to_string(need_coverage().m_star));
        break;
      case Measurement::Kind::c_prime_at: {
        Value const lambda = lambda_at(m, cfg.model, l);
        bool holds;
        if (auto const* r = std::get_if<Rational>(&lambda)) {
          holds = is_c_prime(p, need_pieces(), *r).holds;
        } else {
          holds = is_c_prime_real(p, need_pieces(), std::get<double>(lambda));
        }
        emit(m.name, holds ? "true" : "false");
        break;
      }
      case Measurement::Kind::covers_length:
        emit(m.name, covers_all(p, length_at(m, cfg.model, l)) ? "true" : "false");
        break;
      case Measurement::Kind::bounds: {
        PresentationStats s;
        s.m = p.generators;
        s.M = p.max_relator_length();
        s.min_r = p.min_relator_length();
        s.lambda_star = need_pieces().lambda_star;
        s.m_star = need_coverage().m_star;
        std::optional<DensityParams> dp;
        if (cfg.model.kind == ModelSpec::Kind::density) {
          dp = DensityParams{cfg.model.d.to_double(), l};
        }
        BoundsReport const b = bounds_report(s, dp);
        auto value = [](BoundValue const& v) {
          return v.value ? real_text(*v.value) : std::string("failed");
        };
        emit("bounds.upper", value(b.upper));
        emit("bounds.kappa", value(b.kappa));
        emit("bounds.lower_exact",
             b.lower ? real_text(b.lower->lower_exact) : "failed");
        emit("bounds.lower_fixed_c",
             b.lower ? real_text(b.lower->lower_fixed_c) : "failed");
        emit("bounds.entropy_upper", value(b.entropy_upper));
        if (dp) {
          emit("bounds.density_upper", value(b.density_upper));
        }
        break;
      }
    }
  }
  return rows;
}

double parse_real(std::string const& s) {
  if (s.find('/') != std::string::npos) {
    return Rational::parse(s).to_double();
  }
  double x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + s + "'", 0, 0);
  }
  return x;
}

}  // namespace

void validate_config(ExperimentConfig const& cfg) {
  ModelSpec const& model = cfg.model;
  if (model.m < 2) {
    throw PreconditionError("experiments need m >= 2");
  }
  if (model.kind == ModelSpec::Kind::few_relator && model.n < 1) {
    throw PreconditionError("few relator model needs n >= 1");
  }
  if (model.kind == ModelSpec::Kind::density &&
      (!(model.d > Rational(0)) || !(model.d < Rational(1)))) {
    throw PreconditionError("density must lie in (0, 1)");
  }
  if (cfg.trials < 1) {
    throw PreconditionError("trials must be at least 1");
  }
  if (cfg.lengths.empty()) {
    throw PreconditionError("no lengths given");
  }
  if (cfg.measurements.empty()) {
    throw PreconditionError("no measurements given");
  }
  std::vector<Measurement> ms;
  for (auto const& key : cfg.measurements) {
    ms.push_back(parse_measurement(key));
  }
  for (int l : cfg.lengths) {
    if (l < 1) {
      throw PreconditionError("lengths must be at least 1");
    }
    std::int64_t relators = model.n;
    if (model.kind == ModelSpec::Kind::density) {
      relators = density_relator_count(model.m, model.d, l, kTrialRelatorCap);
    }
    if (relators > kTrialRelatorCap) {
      throw PreconditionError("more than " + std::to_string(kTrialRelatorCap) +
                              " relators per trial");
    }
    if (relators * l > kTrialLetterCap) {
      throw PreconditionError(
          "trial at l = " + std::to_string(l) + " would hold " +
          std::to_string(relators * l) + " letters, over the cap of " +
          std::to_string(kTrialLetterCap));
    }
    for (auto const& m : ms) {
      if (m.kind == Measurement::Kind::c_prime_at) {
        lambda_at(m, model, l);
      } else if (m.kind == Measurement::Kind::covers_length) {
        length_at(m, model, l);
      }
    }
  }
}

Presentation sample_trial(ExperimentConfig const& cfg, int l, int trial) {
  std::uint64_t const s = subseed(cfg.seed, {static_cast<std::uint64_t>(l),
                                             static_cast<std::uint64_t>(trial)});
  if (cfg.model.kind == ModelSpec::Kind::few_relator) {
    return sample_few_relator({cfg.model.m, cfg.model.n, l, s});
  }
  return sample_density({cfg.model.m, cfg.model.d, l, s, kTrialRelatorCap});
}

std::pair<double, double> wilson_interval(std::int64_t k, std::int64_t n) {
  if (n <= 0) {
    return {0.0, 1.0};
  }
  double const z = 1.959963984540054;
  double const nn = static_cast<double>(n);
  double const p = static_cast<double>(k) / nn;
  double const denom = 1.0 + z * z / nn;
  double const centre = (p + z * z / (2 * nn)) / denom;
  double const half =
      z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  double const low = k == 0 ? 0.0 : std::max(0.0, centre - half);
  double const high = k == n ? 1.0 : std::min(1.0, centre + half);
  return {low, high};
}

std::vector<Aggregate> aggregate_rows(ExperimentConfig const& cfg,
                                      std::vector<Row> const& rows) {
  std::vector<Aggregate> out;
  for (int l : cfg.lengths) {
    std::vector<std::string> names;
    std::map<std::string, std::vector<std::string>> values;
    for (Row const& r : rows) {
      if (r.l != l) {
        continue;
      }
      if (!values.count(r.measurement)) {
        names.push_back(r.measurement);
      }
      values[r.measurement].push_back(r.value);
    }
    for (auto const& name : names) {
      auto const& vs = values[name];
      Aggregate a;
      a.l = l;
      a.measurement = name;
      a.trials = static_cast<int>(vs.size());
      bool verdict = true;
      for (auto const& v : vs) {
        verdict = verdict && (v == "true" || v == "false");
      }
      if (verdict) {
        std::int64_t k = std::count(vs.begin(), vs.end(), "true");
        a.successes = k;
        a.fraction = Rational(k, a.trials);
        std::tie(a.wilson_low, a.wilson_high) = wilson_interval(k, a.trials);
      } else {
        double sum = 0;
        int used = 0;
        for (auto const& v : vs) {
          if (v == "failed") {
            ++a.failed;
            continue;
          }
          double x = parse_real(v);
          sum += x;
          ++used;
          a.min = a.min ? std::min(*a.min, x) : x;
          a.max = a.max ? std::max(*a.max, x) : x;
        }
        if (used > 0) {
          a.mean = sum / used;
        }
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

ExperimentResult run_experiment(ExperimentConfig const& cfg) {
  validate_config(cfg);
  std::vector<Measurement> ms;
  for (auto const& key : cfg.measurements) {
    ms.push_back(parse_measurement(key));
  }
  std::size_t const T = static_cast<std::size_t>(cfg.trials);
  std::size_t const tasks = cfg.lengths.size() * T;
  std::vector<std::vector<Row>> per_task(tasks);
  parallel_for(tasks, [&](std::size_t i) {
    per_task[i] = run_trial(cfg, ms, cfg.lengths[i / T], static_cast<int>(i % T));
  });

  ExperimentResult res;
  res.config = cfg;
  for (auto& rows : per_task) {
    res.rows.insert(res.rows.end(), std::make_move_iterator(rows.begin()),
                    std::make_move_iterator(rows.end()));
  }
  res.aggregates = aggregate_rows(cfg, res.rows);

  auto& md = res.metadata;
  md["version"] = "1.0.0";
  md["seed"] = std::to_string(cfg.seed);
  md["rng"] = "std::mt19937_64";
  md["trial_seed"] = "splitmix64 fold of (seed, l, trial)";
  md["relator_seed"] = "splitmix64 fold of (trial seed, relator index)";
  md["sampling"] = "relators i.i.d. uniform, with replacement";
  md["conjugate_distinctness"] = "by (relator, sign, shift) index";
  if (cfg.model.kind == ModelSpec::Kind::density) {
    md["density_rounding"] = "floor((2m-1)^(d l)), minimum 1";
    std::string counts;
    for (int l : cfg.lengths) {
      if (!counts.empty()) {
        counts += ",";
      }
      counts += std::to_string(l) + ":" +
                std::to_string(density_relator_count(cfg.model.m, cfg.model.d,
                                                     l, kTrialRelatorCap));
    }
    md["density_relator_counts"] = counts;
  } else {
    md["few_relator_lengths"] = "uniform over all lengths 1..l, weighted by N_k";
  }
  return res;
}

CoverageExperiment coverage_experiment(ModelSpec const& model,
                                       std::vector<int> const& lengths,
                                       std::string const& k_expr, int trials,
                                       std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.lengths = lengths;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.measurements = {"covers_length(" + k_expr + ")"};
  CoverageExperiment out;
  out.result = run_experiment(cfg);
  Measurement const ms = parse_measurement(cfg.measurements[0]);

  for (Aggregate const& a : out.result.aggregates) {
    CoverageReference ref;
    ref.l = a.l;
    ref.k = static_cast<int>(length_at(ms, model, a.l));
    ref.covered_fraction = *a.fraction;
    ref.miss_fraction = Rational(1) - *a.fraction;
    std::int64_t relators = model.n;
    if (model.kind == ModelSpec::Kind::density) {
      relators = density_relator_count(model.m, model.d, a.l, kTrialRelatorCap);
    }
    try {
      double const log_omit =
          log_omission_bound({model.m, a.l, ref.k}) * static_cast<double>(relators);
      double const log_bound = std::log(4.0 / 3.0) +
                               ref.k * std::log(2.0 * model.m - 1.0) +
                               std::min(log_omit, 0.0);
      double const b = std::min(1.0, std::exp(log_bound));
      ref.miss_bound = b;
      ref.standard_error = std::sqrt(b * (1 - b) / trials);
      ref.within_bound =
          ref.miss_fraction.to_double() <= b + 3 * ref.standard_error;
    } catch (PreconditionError const& e) {
      ref.bound_failure = e.what();
    }
    out.reference.push_back(std::move(ref));
  }
  return out;
}

OmissionFrequency omission_frequency(int m, int l, Word const& word,
                                     int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw PreconditionError("trials must be at least 1");
  }
  if (word.empty() || !is_reduced(word) || word.max_generator() > m) {
    throw PreconditionError("omitted word must be a nonempty reduced word over "
                            "the generators");
  }
  OmissionFrequency out;
  out.m = m;
  out.l = l;
  out.word = word;
  out.trials = trials;
  out.bound = omission_bound({m, l, static_cast<std::int64_t>(word.size())});

  std::vector<char> omitted(static_cast<std::size_t>(trials), 0);
  parallel_for(omitted.size(), [&](std::size_t i) {
    Rng rng(subseed(seed, {static_cast<std::uint64_t>(l), i}));
    Word const r = sample_cyclically_reduced(m, l, rng);
    omitted[i] = std::search(r.begin(), r.end(), word.begin(), word.end()) == r.end();
  });
  out.omitted = std::count(omitted.begin(), omitted.end(), 1);
  out.frequency = static_cast<double>(out.omitted) / trials;
  out.standard_error = std::sqrt(out.bound * (1 - out.bound) / trials);
  out.within_bound = out.frequency <= out.bound + 3 * out.standard_error;
  return out;
}

}  // namespace randgrp
