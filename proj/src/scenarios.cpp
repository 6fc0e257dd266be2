/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "constants.hpp"
#include "qparser.hpp"

namespace infobound {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(errc::schema, message);
}

[[noreturn]] void field_error(const std::string& scenario,
                              const std::string& field,
                              const std::string& message) {
  schema_error("scenario '" + scenario + "', field '" + field + "': " +
               message);
}

Quantity parse_field(const std::string& scenario, const std::string& field,
                     const json& node, const Dimension& want) {
  if (!node.is_string())
    field_error(scenario, field, "expected a quantity-expression string");
  Quantity q;
  try {
    q = eval_expression(node.get<std::string>());
  } catch (const Error& e) {
    field_error(scenario, field, e.what());
  }
  if (q.dimension() != want)
    field_error(scenario, field, "expected " + want.str() + ", got " +
                                     q.dimension().str());
  return q;
}

Scenario parse_scenario(const json& node, std::size_t index) {
  if (!node.is_object())
    schema_error("scenario #" + std::to_string(index) +
                 " is not a JSON object");

  std::string name;
  if (auto it = node.find("name"); it != node.end() && it->is_string())
    name = it->get<std::string>();
  if (name.empty())
    schema_error("scenario #" + std::to_string(index) +
                 " has no non-empty 'name'");

  static const std::set<std::string> known_keys = {"name", "length", "energy",
                                                   "mass", "entropy", "mu"};
  for (const auto& [key, value] : node.items())
    if (!known_keys.contains(key))
      field_error(name, key, "unknown field");

  Scenario s;
  s.name = name;

  if (!node.contains("length"))
    field_error(name, "length", "missing required field");
  s.length = parse_field(name, "length", node.at("length"), dim::length);
  if (!(s.length.magnitude() > 0.0))
    field_error(name, "length", "must be positive");

  bool has_energy = node.contains("energy");
  bool has_mass = node.contains("mass");
  if (has_energy == has_mass)
    schema_error("scenario '" + name +
                 "': exactly one of 'energy' or 'mass' is required");
  if (has_energy) {
    s.energy = parse_field(name, "energy", node.at("energy"), dim::energy);
  } else {
    Quantity m = parse_field(name, "mass", node.at("mass"), dim::mass);
    if (m.magnitude() < 0.0) field_error(name, "mass", "must be non-negative");
    s.energy = m * pow_int(constants().c, 2);  // rest energy
  }
  if (s.energy.magnitude() < 0.0)
    field_error(name, "energy", "must be non-negative");

  if (node.contains("entropy")) {
    s.entropy = parse_field(name, "entropy", node.at("entropy"), dim::entropy);
    if (s.entropy.magnitude() < 0.0)
      field_error(name, "entropy", "must be non-negative");
  } else {
    s.entropy = Quantity(0.0, dim::entropy);
  }

  if (node.contains("mu")) {
    const json& mu = node.at("mu");
    if (!mu.is_number()) field_error(name, "mu", "expected a number");
    s.mu = mu.get<double>();
    if (!(s.mu > 0.0) || !std::isfinite(s.mu))
      field_error(name, "mu", "must be positive");
  }
  return s;
}

ScenarioFile parse_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("scenarios") ||
      !doc.at("scenarios").is_array())
    schema_error("document must be an object with a 'scenarios' array");

  ScenarioFile file;
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const json& node : doc.at("scenarios")) {
    Scenario s = parse_scenario(node, index++);
    if (!seen.insert(s.name).second)
      schema_error("duplicate scenario name '" + s.name + "'");
    file.scenarios.push_back(std::move(s));
  }
  return file;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void emit_number(ordered_json& obj, const char* key, double v) {
  obj[key] = v;
  obj[std::string(key) + "_str"] = sci(v);
}

std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%12.5e", v);
  return buf;
}

}  // namespace

ScenarioFile load_scenarios(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(errc::schema, std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

ScenarioFile load_scenarios_text(const std::string& json_text) {
  std::istringstream in(json_text);
  return load_scenarios(in);
}

ScenarioFile load_scenarios_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io, "cannot open scenario file '" + path + "'");
  return load_scenarios(in);
}

BoundReport report_for(const Scenario& s) {
  BoundReport r;
  r.name = s.name;
  r.length = s.length;
  r.energy = s.energy;
  r.entropy = s.entropy;
  r.mu = s.mu;
  SystemSpec spec(s.length, s.energy, s.entropy, s.mu);
  r.breakdown = storage_bound_bits(spec);
  r.bh_limit_bits = bekenstein_hawking_limit(s.length);
  r.landauer_floor_entropy = landauer_floor(s.mu);
  r.infeasible = r.breakdown.infeasible;
  if (r.breakdown.n_max_bits > 0.0)
    r.log10_gap = std::log10(r.bh_limit_bits / r.breakdown.n_max_bits);
  return r;
}

std::vector<BoundReport> evaluate(const ScenarioFile& file) {
  std::vector<BoundReport> out;
  out.reserve(file.scenarios.size());
  for (const Scenario& s : file.scenarios) out.push_back(report_for(s));
  return out;
}

namespace {

std::string render_json(const std::vector<BoundReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const BoundReport& r : reports) {
    ordered_json obj;
    obj["name"] = r.name;
    emit_number(obj, "length_m", r.length.magnitude());
    emit_number(obj, "energy_j", r.energy.magnitude());
    emit_number(obj, "entropy_si", r.entropy.magnitude());
    emit_number(obj, "mu", r.mu);
    emit_number(obj, "bh_limit_bits", r.bh_limit_bits);
    emit_number(obj, "term_quadratic", r.breakdown.term_quadratic);
    emit_number(obj, "term_entropy", r.breakdown.term_entropy);
    emit_number(obj, "term_linear", r.breakdown.term_linear);
    emit_number(obj, "raw_rhs_bits", r.breakdown.raw_rhs_bits);
    emit_number(obj, "n_max_bits", r.breakdown.n_max_bits);
    emit_number(obj, "min_mass_kg", r.breakdown.min_mass.magnitude());
    emit_number(obj, "landauer_floor_si",
                r.landauer_floor_entropy.magnitude());
    if (r.log10_gap) emit_number(obj, "log10_gap", *r.log10_gap);
    obj["infeasible"] = r.infeasible;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_table(const std::vector<BoundReport>& reports) {
  std::size_t name_width = 8;
  for (const BoundReport& r : reports)
    name_width = std::max(name_width, r.name.size());

  std::string out;
  char line[512];
  std::snprintf(line, sizeof line,
                "%-*s %12s %12s %12s %12s %12s %12s %12s %12s %9s\n",
                static_cast<int>(name_width), "name", "L_m", "U_J", "S_over_kB",
                "T1", "T2", "T3", "n_max_bits", "bh_bits", "gap");
  out += line;
  for (const BoundReport& r : reports) {
    std::string gap = "      n/a";
    if (r.log10_gap) {
      char g[16];
      std::snprintf(g, sizeof g, "%9.4f", *r.log10_gap);
      gap = g;
    }
    std::snprintf(line, sizeof line, "%-*s %s %s %s %s %s %s %s %s %s\n",
                  static_cast<int>(name_width), r.name.c_str(),
                  format_cell(r.length.magnitude()).c_str(),
                  format_cell(r.energy.magnitude()).c_str(),
                  format_cell(r.breakdown.term_entropy).c_str(),
                  format_cell(r.breakdown.term_quadratic).c_str(),
                  format_cell(r.breakdown.term_entropy).c_str(),
                  format_cell(r.breakdown.term_linear).c_str(),
                  format_cell(r.breakdown.n_max_bits).c_str(),
                  format_cell(r.bh_limit_bits).c_str(), gap.c_str());
    out += line;
  }
  return out;
}

}  // namespace

std::string render(const std::vector<BoundReport>& reports,
                   ReportFormat fmt) {
  return fmt == ReportFormat::json ? render_json(reports)
                                   : render_table(reports);
}

}  // namespace infobound
