/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end over the infobound C API.
//
// Exit codes: 0 success, 1 usage error, 2 expression/dimension/data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "infobound/infobound.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

[[noreturn]] void die_data() {
  std::cerr << "error: " << ib_last_error_message() << "\n";
  std::exit(kExitData);
}

void check(ib_status status) {
  if (status != IB_OK) die_data();
}

using QuantityPtr = std::unique_ptr<ib_quantity, decltype(&ib_quantity_free)>;

QuantityPtr parse_quantity(const std::string& text) {
  ib_quantity* q = nullptr;
  check(ib_quantity_parse(text.c_str(), &q));
  return QuantityPtr(q, &ib_quantity_free);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ib_string_free(s);
  return out;
}

void print_bound_report(const ib_bound_report& r) {
  std::cout << "length: " << fmt6(r.length_m) << " m\n"
            << "energy: " << fmt6(r.energy_j) << " J\n"
            << "entropy: " << fmt6(r.entropy_si) << " J/K\n"
            << "mu: " << fmt6(r.mu) << "\n"
            << "bh_limit_bits: " << fmt6(r.bh_limit_bits) << "\n"
            << "term_quadratic: " << fmt6(r.storage.term_quadratic) << "\n"
            << "term_entropy: " << fmt6(r.storage.term_entropy) << "\n"
            << "term_linear: " << fmt6(r.storage.term_linear) << "\n"
            << "raw_rhs_bits: " << fmt6(r.storage.raw_rhs_bits) << "\n"
            << "n_max_bits: " << fmt6(r.storage.n_max_bits) << "\n"
            << "min_mass_kg: " << fmt6(r.storage.min_mass_kg) << "\n"
            << "landauer_floor: " << fmt6(r.landauer_floor_si) << " J/K\n"
            << "log10_gap: "
            << (r.has_log10_gap ? fmt6(r.log10_gap) : std::string("n/a"))
            << "\n"
            << "infeasible: " << (r.infeasible ? "yes" : "no") << "\n";
}

int run_eval(const std::string& expr, const std::string& in_unit) {
  QuantityPtr q = parse_quantity(expr);
  if (!in_unit.empty()) {
    double value = 0.0;
    check(ib_quantity_value_in(q.get(), in_unit.c_str(), &value));
    std::cout << fmt6(value) << " " << in_unit << "\n";
  } else {
    char* text = nullptr;
    check(ib_quantity_render(q.get(), 6, &text));
    std::cout << take_string(text) << "\n";
  }
  return 0;
}

int run_blackhole(const std::string& mass_expr, const std::string& radius_expr,
                  double mu) {
  ib_blackhole* bh = nullptr;
  if (!mass_expr.empty()) {
    QuantityPtr mass = parse_quantity(mass_expr);
    check(ib_blackhole_from_mass(mass.get(), &bh));
  } else {
    QuantityPtr radius = parse_quantity(radius_expr);
    check(ib_blackhole_from_radius(radius.get(), &bh));
  }
  std::unique_ptr<ib_blackhole, decltype(&ib_blackhole_free)> guard(
      bh, &ib_blackhole_free);
  ib_blackhole_info info;
  check(ib_blackhole_get_info(bh, mu, &info));
  std::cout << "mass: " << fmt6(info.mass_kg) << " kg\n"
            << "radius: " << fmt6(info.radius_m) << " m\n"
            << "horizon_area: " << fmt6(info.horizon_area_m2) << " m^2\n"
            << "entropy: " << fmt6(info.entropy_si) << " J/K\n"
            << "capture_cross_section: " << fmt6(info.capture_cross_section_m2)
            << " m^2\n"
            << "min_bit_energy: " << fmt6(info.min_bit_energy_j) << " J\n"
            << "mu: " << fmt6(mu) << "\n";
  return 0;
}

int run_bound(const std::string& length, const std::string& energy,
              const std::string& mass, const std::string& entropy,
              double mu, bool mu_given, const std::string& format) {
  nlohmann::json scenario;
  scenario["name"] = "cli";
  scenario["length"] = length;
  if (!energy.empty()) scenario["energy"] = energy;
  if (!mass.empty()) scenario["mass"] = mass;
  if (!entropy.empty()) scenario["entropy"] = entropy;
  if (mu_given) scenario["mu"] = mu;
  nlohmann::json doc;
  doc["scenarios"] = nlohmann::json::array({scenario});

  ib_report* report = nullptr;
  check(ib_report_load_json(doc.dump().c_str(), &report));
  std::unique_ptr<ib_report, decltype(&ib_report_free)> guard(
      report, &ib_report_free);
  if (format == "json") {
    char* text = nullptr;
    check(ib_report_render(report, IB_FORMAT_JSON, &text));
    std::cout << take_string(text);
  } else {
    ib_bound_report entry;
    check(ib_report_entry(report, 0, &entry));
    print_bound_report(entry);
  }
  return 0;
}

int run_landauer(double mu, double bits) {
  double floor = 0.0;
  check(ib_landauer_floor(mu, &floor));
  double erasure = 0.0;
  check(ib_landauer_erasure_entropy(bits, &erasure));
  std::cout << "mu: " << fmt6(mu) << "\n"
            << "floor: " << fmt6(floor) << " J/K\n"
            << "bits: " << fmt6(bits) << "\n"
            << "erasure_entropy: " << fmt6(erasure) << " J/K\n";
  return 0;
}

int run_report(const std::string& path, const std::string& format,
               const std::string& output_path) {
  ib_report* report = nullptr;
  check(ib_report_load_file(path.c_str(), &report));
  std::unique_ptr<ib_report, decltype(&ib_report_free)> guard(
      report, &ib_report_free);
  char* text = nullptr;
  check(ib_report_render(
      report, format == "json" ? IB_FORMAT_JSON : IB_FORMAT_TABLE, &text));
  std::string rendered = take_string(text);
  if (output_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream out(output_path);
  out << rendered;
  if (!out) {
    std::cerr << "error: cannot write '" << output_path << "'\n";
    return kExitData;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermodynamic limits on information storage and erasure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ib_version());

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a quantity expression");
  std::string eval_expr, eval_in;
  eval_cmd->add_option("expr", eval_expr, "quantity expression")->required();
  eval_cmd->add_option("--in", eval_in,
                       "unit expression to convert the result into");

  auto* bh_cmd =
      app.add_subcommand("blackhole", "Schwarzschild hole properties");
  std::string bh_mass, bh_radius;
  double bh_mu = ib_default_capture_factor();
  auto* bh_mass_opt =
      bh_cmd->add_option("--mass", bh_mass, "hole mass (mass expression)");
  bh_cmd->add_option("--radius", bh_radius, "horizon radius (length expression)")
      ->excludes(bh_mass_opt);
  bh_cmd->add_option("--mu", bh_mu, "capture factor (default sqrt(27/4))");

  auto* bound_cmd = app.add_subcommand(
      "bound", "storage bounds for a system of given extent and energy");
  std::string bd_length, bd_energy, bd_mass, bd_entropy;
  std::string bd_format = "text";
  double bd_mu = ib_default_capture_factor();
  bound_cmd->add_option("--length", bd_length, "spatial extent (length expression)")
      ->required();
  auto* bd_energy_opt = bound_cmd->add_option(
      "--energy", bd_energy, "total energy (energy expression)");
  bound_cmd->add_option("--mass", bd_mass, "rest mass (mass expression)")
      ->excludes(bd_energy_opt);
  bound_cmd->add_option("--entropy", bd_entropy,
                        "intrinsic entropy (entropy expression, default 0)");
  auto* bd_mu_opt =
      bound_cmd->add_option("--mu", bd_mu, "capture factor (default sqrt(27/4))");
  bound_cmd->add_option("--format", bd_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* landauer_cmd =
      app.add_subcommand("landauer", "per-bit erasure floor and erasure cost");
  double ld_mu = ib_default_capture_factor();
  double ld_bits = 1.0;
  landauer_cmd->add_option("--mu", ld_mu, "capture factor (default sqrt(27/4))");
  landauer_cmd->add_option("--bits", ld_bits, "number of erased bits");

  auto* report_cmd =
      app.add_subcommand("report", "evaluate every scenario in a file");
  std::string rp_path;
  std::string rp_format = "table";
  std::string rp_output;
  report_cmd->add_option("file", rp_path, "scenario JSON file")->required();
  report_cmd->add_option("--format", rp_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  report_cmd->add_option("-o,--output", rp_output,
                         "write the rendered report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (eval_cmd->parsed()) return run_eval(eval_expr, eval_in);
  if (bh_cmd->parsed()) {
    if (bh_mass.empty() == bh_radius.empty()) {
      std::cerr << "error: exactly one of --mass and --radius is required\n";
      return kExitUsage;
    }
    return run_blackhole(bh_mass, bh_radius, bh_mu);
  }
  if (bound_cmd->parsed()) {
    if (bd_energy.empty() == bd_mass.empty()) {
      std::cerr << "error: exactly one of --energy and --mass is required\n";
      return kExitUsage;
    }
    return run_bound(bd_length, bd_energy, bd_mass, bd_entropy, bd_mu,
                     !bd_mu_opt->empty(), bd_format);
  }
  if (landauer_cmd->parsed()) return run_landauer(ld_mu, ld_bits);
  if (report_cmd->parsed())
    return run_report(rp_path, rp_format, rp_output);

  std::cerr << app.help();
  return kExitUsage;
}
