#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "randgrp/bounds.hpp"
#include "randgrp/cancellation.hpp"
#include "randgrp/coverage.hpp"
#include "randgrp/diagram.hpp"
#include "randgrp/experiment.hpp"

namespace randgrp {

// JSON encodings.  Rationals are {"num": p, "den": q}; big integers are
// decimal strings.
nlohmann::json to_json(Rational const& r);
nlohmann::json to_json(ConjugateIndex const& c);
nlohmann::json to_json(PieceReport const& r, Presentation const& p);
nlohmann::json to_json(CoverageReport const& r);
nlohmann::json to_json(BoundsReport const& r);
nlohmann::json to_json(DiagramCheckReport const& r);
nlohmann::json to_json(ExperimentConfig const& cfg);
nlohmann::json to_json(ExperimentResult const& r);

// Sweep configuration file:
//   { "model": {"type": "few_relator", "m": 2, "n": 2}
//            | {"type": "density", "m": 2, "d": "0.05"},
//     "lengths": [100, 400], "trials": 200,
//     "measurements": ["lambda_star", "c_prime_at(0.12)", ...],
//     "seed": 7 (optional; the command line seed takes precedence) }
// Densities may be numbers or exact strings such as "1/20".
ExperimentConfig experiment_config_from_json(nlohmann::json const& j);

// CSV with header l,trial,measurement,value (RFC 4180 quoting).
std::string rows_to_csv(std::vector<Row> const& rows);
std::vector<Row> rows_from_csv(std::string const& text);
std::vector<Row> rows_from_json(nlohmann::json const& j);

}  // namespace randgrp
