/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"

namespace infobound {

/// One validated system description. Built from a scenario file entry whose
/// dimensioned fields are quantity-expression strings; mass input has
/// already been converted to rest energy here.
struct Scenario {
  std::string name;
  Quantity length;
  Quantity energy;
  Quantity entropy;
  double mu = relativistic_capture_factor;
};

struct ScenarioFile {
  std::vector<Scenario> scenarios;
};

// Scenario files are JSON:
//
//   {"scenarios": [{"name": "...", "length": "<expr>",
//                   "energy" | "mass": "<expr>",
//                   "entropy": "<expr>",      // optional, default "0 kB"
//                   "mu": <number>}, ...]}    // optional, default sqrt(27/4)
//
// Every expression is parsed and dimension-checked eagerly; names must be
// unique and non-empty; exactly one of energy/mass per scenario; unknown
// keys are rejected. Violations throw Error(errc::schema) naming the
// scenario and field.
ScenarioFile load_scenarios(std::istream& in);
ScenarioFile load_scenarios_text(const std::string& json_text);
ScenarioFile load_scenarios_file(const std::string& path);

/// Everything computed for one scenario. log10_gap (decades between the
/// areal limit and the storage bound) is present exactly when n_max > 0.
struct BoundReport {
  std::string name;
  Quantity length;
  Quantity energy;
  Quantity entropy;
  double mu = relativistic_capture_factor;
  double bh_limit_bits = 0.0;
  StorageBoundBreakdown breakdown;
  Quantity landauer_floor_entropy;
  std::optional<double> log10_gap;
  bool infeasible = false;
};

BoundReport report_for(const Scenario& s);

/// One report per scenario, in input order.
std::vector<BoundReport> evaluate(const ScenarioFile& file);

enum class ReportFormat { table, json };

/// Deterministic rendering. `table` is fixed-width with one header row and
/// one row per scenario; `json` is an array of report objects carrying every
/// numeric field twice, as a raw double and as a full-precision scientific
/// string that survives tools which mangle doubles.
std::string render(const std::vector<BoundReport>& reports, ReportFormat fmt);

}  // namespace infobound
