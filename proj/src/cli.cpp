#include "randgrp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "randgrp/bounds.hpp"
#include "randgrp/cayley.hpp"
#include "randgrp/counting.hpp"
#include "randgrp/presentation_io.hpp"
#include "randgrp/report.hpp"
#include "randgrp/sampler.hpp"

namespace randgrp {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  // sample
  std::string model = "few";
  int m = 2;
  int n = 1;
  int l = 0;
  std::string d;
  std::uint64_t seed = 0;
  std::string out_path;
  // analyze / bounds / ball / slimness
  std::string pres_path;
  std::vector<std::string> lambdas;
  std::optional<double> bounds_d;
  std::optional<std::int64_t> bounds_l;
  // count
  std::optional<int> g;
  // sweep
  std::string config_path;
  bool csv = false;
  // verify-diagram
  std::string diagram_path;
  std::string lambda = "1/6";
  // ball / slimness
  int radius = 0;
  int samples = 0;
  int sides = 3;
  std::vector<int> trend;
};

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print(std::ostream& out, json const& j) { out << j.dump(2) << "\n"; }

int cmd_sample(Options const& o, std::ostream& out) {
  Presentation p;
  std::string header;
  if (o.model == "few") {
    p = sample_few_relator({o.m, o.n, o.l, o.seed});
    header = "# few relator model: m=" + std::to_string(o.m) +
             " n=" + std::to_string(o.n) + " l<=" + std::to_string(o.l) +
             " seed=" + std::to_string(o.seed) + "\n";
  } else {
    Rational const d = Rational::parse(o.d);
    p = sample_density({o.m, d, o.l, o.seed, kDensityRelatorCap});
    header = "# density model: m=" + std::to_string(o.m) + " d=" +
             d.to_string() + " l=" + std::to_string(o.l) +
             " seed=" + std::to_string(o.seed) + "\n" +
             "# relator count floor((2m-1)^(d l)), minimum 1: " +
             std::to_string(p.relators.size()) + "\n";
  }
  header += "# relators i.i.d. uniform, with replacement; rng std::mt19937_64\n";
  if (o.out_path.empty()) {
    out << header << format_presentation(p);
  } else {
    write_presentation(p, o.out_path);
  }
  return kOk;
}

int cmd_analyze(Options const& o, std::ostream& out) {
  Presentation const p = read_presentation(o.pres_path);
  PieceReport const pieces = piece_report(p);
  json j = to_json(pieces, p);
  json verdicts = json::object();
  std::vector<std::string> lambdas = o.lambdas;
  if (lambdas.empty()) {
    lambdas = {"1/6", "1/8"};
  }
  for (auto const& text : lambdas) {
    verdicts[text] = is_c_prime(p, pieces, Rational::parse(text)).holds;
  }
  j["c_prime"] = verdicts;
  j["coverage"] = to_json(m_star(p));
  print(out, j);
  return kOk;
}

int cmd_bounds(Options const& o, std::ostream& out) {
  Presentation const p = read_presentation(o.pres_path);
  std::optional<DensityParams> density;
  if (o.bounds_d || o.bounds_l) {
    if (!o.bounds_d || !o.bounds_l) {
      throw CLI::ValidationError("--d and --l go together");
    }
    density = DensityParams{*o.bounds_d, *o.bounds_l};
  }
  print(out, to_json(bounds_report(stats_of(p), density)));
  return kOk;
}

int cmd_count(Options const& o, std::ostream& out) {
  json j;
  j["m"] = o.m;
  j["l"] = o.l;
  j["reduced"] = count_reduced(o.m, o.l).str();
  j["cyclically_reduced"] = count_cyclically_reduced(o.m, o.l).str();
  j["cyclically_reduced_upto"] = count_cyclically_reduced_upto(o.m, o.l).str();
  if (o.l >= 3) {
    EndpointCounts const c = endpoint_counts(o.m, o.l - 2);
    j["endpoint_counts"] = {
        {"n", c.n}, {"p", c.p.str()}, {"q", c.q.str()}, {"r", c.r.str()}};
  }
  if (o.g) {
    OmissionBoundInput const in{o.m, o.l, *o.g};
    j["omission_bound"] = omission_bound(in);
    j["log_omission_bound"] = log_omission_bound(in);
  }
  print(out, j);
  return kOk;
}

int cmd_sweep(Options const& o, std::ostream& out) {
  json cfg_json;
  try {
    cfg_json = json::parse(slurp(o.config_path));
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("config: ") + e.what(), 0, 0);
  }
  ExperimentConfig cfg = experiment_config_from_json(cfg_json);
  cfg.seed = o.seed;
  ExperimentResult const r = run_experiment(cfg);
  if (o.csv) {
    out << rows_to_csv(r.rows);
  } else {
    print(out, to_json(r));
  }
  return kOk;
}

int cmd_verify_diagram(Options const& o, std::ostream& out) {
  Presentation const p = read_presentation(o.pres_path);
  json dj;
  try {
    dj = json::parse(slurp(o.diagram_path));
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("diagram: ") + e.what(), 0, 0);
  }
  DiagramCheckReport const r =
      verify_diagram(diagram_from_json(dj), p, Rational::parse(o.lambda));
  print(out, to_json(r));
  return r.euler_identity_holds ? kOk : kFailed;
}

int cmd_ball(Options const& o, std::ostream& out) {
  Presentation const p = read_presentation(o.pres_path);
  CayleyBall const ball(p, o.radius);
  json j;
  j["radius"] = o.radius;
  j["vertices"] = ball.size();
  j["level_sizes"] = ball.level_sizes();
  std::vector<std::string> free_sizes;
  for (int k = 0; k <= o.radius; ++k) {
    free_sizes.push_back(count_reduced(p.generators, k).str());
  }
  j["free_group_level_sizes"] = free_sizes;
  print(out, j);
  return kOk;
}

int cmd_slimness(Options const& o, std::ostream& out) {
  Presentation const p = read_presentation(o.pres_path);
  CayleyBall const ball(p, o.radius);
  json j;
  j["radius"] = o.radius;
  j["samples"] = o.samples;
  j["seed"] = o.seed;
  j["hyperbolicity_constant"] = 2 * p.max_relator_length();
  if (!o.trend.empty()) {
    Rational const lambda = piece_report(p).lambda_star;
    SlimnessTrend const t = slimness_trend(ball, lambda, p.max_relator_length(),
                                           o.trend, o.samples, o.seed);
    j["slope"] = t.slope;
    j["fitted_c"] = t.fitted_c;
    json per = json::array();
    for (auto const& r : t.results) {
      per.push_back({{"sides", r.sides}, {"max_slimness", r.max}});
    }
    j["polygons"] = per;
    print(out, j);
    return kOk;
  }
  SlimnessResult const r = measure_slimness(ball, o.samples, o.sides, o.seed);
  j["sides"] = o.sides;
  j["max_slimness"] = r.max;
  j["per_sample"] = r.per_sample;
  bool const ok = o.sides != 3 || static_cast<std::size_t>(r.max) <=
                                      2 * p.max_relator_length();
  j["within_hyperbolicity_constant"] = ok;
  print(out, j);
  return ok ? kOk : kFailed;
}

}  // namespace

int cli_main(int argc, char const* const* argv, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Random group presentations: sampling, small cancellation, "
               "coverage, diagrams and conformal dimension bounds",
               "randgrp"};
  app.require_subcommand(1);

  auto* sample = app.add_subcommand("sample", "Sample a random presentation");
  sample->add_option("--model", o.model, "few or density")
      ->check(CLI::IsMember({"few", "density"}));
  sample->add_option("--m", o.m, "generators")->check(CLI::Range(2, 1 << 20));
  sample->add_option("--n", o.n, "relators (few relator model)")
      ->check(CLI::PositiveNumber);
  sample->add_option("--l", o.l, "relator length bound")->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--d", o.d, "density, e.g. 0.05 or 1/20");
  sample->add_option("--seed", o.seed, "64-bit seed")->required();
  sample->add_option("--out", o.out_path, "write here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Pieces, C'(lambda), coverage");
  analyze->add_option("presentation", o.pres_path)->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--lambda", o.lambdas, "thresholds to test");

  auto* bounds = app.add_subcommand("bounds", "Conformal dimension bounds");
  bounds->add_option("presentation", o.pres_path)->required()
      ->check(CLI::ExistingFile);
  bounds->add_option("--d", o.bounds_d, "density for the density bound");
  bounds->add_option("--l", o.bounds_l, "length for the density bound");

  auto* count = app.add_subcommand("count", "Exact word counts");
  count->add_option("--m", o.m)->required()->check(CLI::Range(2, 1 << 20));
  count->add_option("--l", o.l)->required()->check(CLI::PositiveNumber);
  count->add_option("--g", o.g, "omitted word length for the omission bound");

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo experiment");
  sweep->add_option("--config", o.config_path, "JSON experiment config")
      ->required()->check(CLI::ExistingFile);
  sweep->add_option("--seed", o.seed)->required();
  sweep->add_flag("--csv", o.csv, "rows as CSV instead of JSON");

  auto* verify = app.add_subcommand("verify-diagram", "Check a van Kampen diagram");
  verify->add_option("diagram", o.diagram_path)->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--presentation", o.pres_path)->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--lambda", o.lambda, "small cancellation constant");

  auto* ball = app.add_subcommand("ball", "Cayley graph ball sizes");
  ball->add_option("presentation", o.pres_path)->required()
      ->check(CLI::ExistingFile);
  ball->add_option("--radius", o.radius)->required()->check(CLI::NonNegativeNumber);

  auto* slim = app.add_subcommand("slimness", "Geodesic polygon slimness");
  slim->add_option("presentation", o.pres_path)->required()
      ->check(CLI::ExistingFile);
  slim->add_option("--radius", o.radius)->required()->check(CLI::NonNegativeNumber);
  slim->add_option("--samples", o.samples)->required()->check(CLI::PositiveNumber);
  slim->add_option("--seed", o.seed)->required();
  slim->add_option("--sides", o.sides, "polygon sides")->check(CLI::Range(2, 1000));
  slim->add_option("--trend", o.trend, "fit the slimness constant over these sides");

  try {
    app.parse(argc, argv);
    if (sample->parsed() && o.model == "density" && o.d.empty()) {
      throw CLI::ValidationError("--d is required for the density model");
    }
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (verify->parsed()) return cmd_verify_diagram(o, out);
    if (ball->parsed()) return cmd_ball(o, out);
    if (slim->parsed()) return cmd_slimness(o, out);
  } catch (CLI::ValidationError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace randgrp
