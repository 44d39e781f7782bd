#include "randgrp/report.hpp"

#include "randgrp/error.hpp"

namespace randgrp {

using json = nlohmann::json;

json to_json(Rational const& r) { return {{"num", r.num()}, {"den", r.den()}}; }

json to_json(ConjugateIndex const& c) {
  return {{"relator", c.relator}, {"sign", c.sign}, {"shift", c.shift}};
}

json to_json(PieceReport const& r, Presentation const& p) {
  json out;
  out["generators"] = p.generators;
  out["relators"] = p.relators.size();
  out["max_piece_length"] = r.max_piece_length;
  out["lambda_star"] = to_json(r.lambda_star);
  if (r.witness) {
    out["witness"] = {{"piece", r.witness->piece.to_string()},
                      {"first", to_json(r.witness->first)},
                      {"second", to_json(r.witness->second)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(CoverageReport const& r) {
  json out;
  out["m_star"] = r.m_star;
  out["missing_witness"] =
      r.missing_witness ? json(r.missing_witness->to_string()) : json(nullptr);
  json counts = json::object();
  for (auto const& [k, c] : r.per_length_counts) {
    counts[std::to_string(k)] = c;
  }
  out["per_length_counts"] = counts;
  return out;
}

namespace {

json bound_value(BoundValue const& v) {
  if (v.value) {
    return *v.value;
  }
  return {{"failed", v.failure}};
}

}  // namespace

json to_json(BoundsReport const& r) {
  json out;
  out["stats"] = {{"m", r.stats.m},
                  {"M", r.stats.M},
                  {"min_r", r.stats.min_r},
                  {"lambda_star", to_json(r.stats.lambda_star)},
                  {"m_star", r.stats.m_star}};
  out["lambda_used"] = to_json(r.lambda_used);
  out["lambda_defaulted"] = r.lambda_defaulted;
  out["upper"] = bound_value(r.upper);
  out["kappa"] = bound_value(r.kappa);
  if (r.lower) {
    out["lower_exact"] = r.lower->lower_exact;
    out["lower_fixed_c"] = r.lower->lower_fixed_c;
    out["K"] = r.lower->K;
    out["T_size"] = r.lower->T_size.str();
    out["delta_used"] = to_json(r.lower->delta_used);
  } else {
    out["lower_exact"] = {{"failed", r.lower_failure}};
    out["lower_fixed_c"] = {{"failed", r.lower_failure}};
  }
  out["entropy_upper"] = bound_value(r.entropy_upper);
  if (r.density_upper.value || !r.density_upper.failure.empty()) {
    out["density_upper"] = bound_value(r.density_upper);
  }
  json headline = json::array();
  for (auto const& h : r.headline) {
    headline.push_back({{"model", h.model},
                        {"lower", h.lower},
                        {"upper", h.upper},
                        {"lower_at_C_1", h.lower_at_c1},
                        {"upper_at_C_1", h.upper_at_c1}});
  }
  out["headline"] = headline;
  out["notes"] = r.notes;
  return out;
}

json to_json(DiagramCheckReport const& r) {
  json out;
  out["is_reduced"] = r.is_reduced;
  out["euler_identity_holds"] = r.euler_identity_holds;
  out["euler_lhs"] = 6;
  out["euler_rhs"] = r.euler_rhs;
  out["interior_face_count"] = r.interior_face_count;
  out["interior_face_bound"] = r.face_bound ? json(*r.face_bound) : json(nullptr);
  out["d_int"] = r.d_int;
  out["d_ext"] = r.d_ext;
  out["boundary_word"] = r.boundary_word.to_string();
  return out;
}

json to_json(ExperimentConfig const& cfg) {
  json model;
  if (cfg.model.kind == ModelSpec::Kind::few_relator) {
    model = {{"type", "few_relator"}, {"m", cfg.model.m}, {"n", cfg.model.n}};
  } else {
    model = {{"type", "density"}, {"m", cfg.model.m}, {"d", cfg.model.d.to_string()}};
  }
  return {{"model", model},
          {"lengths", cfg.lengths},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"measurements", cfg.measurements}};
}

json to_json(ExperimentResult const& r) {
  json rows = json::array();
  for (Row const& row : r.rows) {
    rows.push_back({{"l", row.l},
                    {"trial", row.trial},
                    {"measurement", row.measurement},
                    {"value", row.value}});
  }
  json aggs = json::array();
  for (Aggregate const& a : r.aggregates) {
    json j = {{"l", a.l}, {"measurement", a.measurement}, {"trials", a.trials}};
    if (a.fraction) {
      j["successes"] = *a.successes;
      j["fraction"] = to_json(*a.fraction);
      j["fraction_value"] = a.fraction->to_double();
      j["wilson95"] = {a.wilson_low, a.wilson_high};
    } else {
      j["mean"] = a.mean ? json(*a.mean) : json(nullptr);
      j["min"] = a.min ? json(*a.min) : json(nullptr);
      j["max"] = a.max ? json(*a.max) : json(nullptr);
      j["failed"] = a.failed;
    }
    aggs.push_back(std::move(j));
  }
  json md = json::object();
  for (auto const& [k, v] : r.metadata) {
    md[k] = v;
  }
  return {{"config", to_json(r.config)},
          {"metadata", md},
          {"aggregates", aggs},
          {"rows", rows}};
}

namespace {

[[noreturn]] void config_error(std::string const& what) {
  throw ParseError("config: " + what, 0, 0);
}

int int_field(json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    config_error(std::string("'") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

}  // namespace

ExperimentConfig experiment_config_from_json(json const& j) {
  if (!j.is_object()) {
    config_error("top level must be an object");
  }
  ExperimentConfig cfg;
  if (!j.contains("model") || !j.at("model").is_object()) {
    config_error("missing 'model' object");
  }
  json const& model = j.at("model");
  std::string const type =
      model.contains("type") && model.at("type").is_string()
          ? model.at("type").get<std::string>()
          : "";
  cfg.model.m = int_field(model, "m");
  if (type == "few_relator") {
    cfg.model.kind = ModelSpec::Kind::few_relator;
    cfg.model.n = int_field(model, "n");
  } else if (type == "density") {
    cfg.model.kind = ModelSpec::Kind::density;
    if (!model.contains("d")) {
      config_error("density model needs 'd'");
    }
    json const& d = model.at("d");
    try {
      if (d.is_string()) {
        cfg.model.d = Rational::parse(d.get<std::string>());
      } else if (d.is_number()) {
        cfg.model.d = Rational::parse(d.dump());
      } else {
        config_error("'d' must be a number or a string");
      }
    } catch (Error const& e) {
      config_error(std::string("bad density: ") + e.what());
    }
  } else {
    config_error("model type must be \"few_relator\" or \"density\"");
  }
  if (!j.contains("lengths") || !j.at("lengths").is_array()) {
    config_error("missing 'lengths' array");
  }
  for (json const& l : j.at("lengths")) {
    if (!l.is_number_integer()) {
      config_error("lengths must be integers");
    }
    cfg.lengths.push_back(l.get<int>());
  }
  cfg.trials = int_field(j, "trials");
  if (!j.contains("measurements") || !j.at("measurements").is_array()) {
    config_error("missing 'measurements' array");
  }
  for (json const& m : j.at("measurements")) {
    if (!m.is_string()) {
      config_error("measurements must be strings");
    }
    cfg.measurements.push_back(m.get<std::string>());
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      config_error("'seed' must be a nonnegative integer");
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  return cfg;
}

namespace {

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string rows_to_csv(std::vector<Row> const& rows) {
  std::string out = "l,trial,measurement,value\n";
  for (Row const& r : rows) {
    out += std::to_string(r.l) + "," + std::to_string(r.trial) + "," +
           csv_field(r.measurement) + "," + csv_field(r.value) + "\n";
  }
  return out;
}

std::vector<Row> rows_from_csv(std::string const& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        line += c == '\n';
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      ++line;
    } else {
      field += c;
    }
  }
  if (quoted) {
    throw ParseError("csv: unterminated quote", line, 1);
  }
  if (!field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty() ||
      records[0] != std::vector<std::string>{"l", "trial", "measurement", "value"}) {
    throw ParseError("csv: expected header l,trial,measurement,value", 1, 1);
  }
  std::vector<Row> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto const& r = records[i];
    if (r.size() != 4) {
      throw ParseError("csv: expected 4 fields", i + 1, 1);
    }
    try {
      rows.push_back({std::stoi(r[0]), std::stoi(r[1]), r[2], r[3]});
    } catch (std::exception const&) {
      throw ParseError("csv: bad l or trial", i + 1, 1);
    }
  }
  return rows;
}

std::vector<Row> rows_from_json(json const& j) {
  std::vector<Row> rows;
  for (json const& r : j.at("rows")) {
    rows.push_back({r.at("l").get<int>(), r.at("trial").get<int>(),
                    r.at("measurement").get<std::string>(),
                    r.at("value").get<std::string>()});
  }
  return rows;
}

}  // namespace randgrp
