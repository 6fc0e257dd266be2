/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Exercises the shared-library surface only: opaque handles, status codes,
// thread-local error reporting, rendered strings.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "infobound/infobound.h"
#include "support.hpp"

using testutil::rel_eq;

namespace {

const char* kPaperExamples = R"({
  "scenarios": [
    {"name": "device", "length": "0.1 m", "mass": "1 kg", "entropy": "1e23 kB"},
    {"name": "pulse", "length": "1e-6 m", "energy": "1 GW * 10 fs"}
  ]
})";

struct QuantityGuard {
  ib_quantity* q = nullptr;
  explicit QuantityGuard(const char* text) {
    REQUIRE(ib_quantity_parse(text, &q) == IB_OK);
  }
  ~QuantityGuard() { ib_quantity_free(q); }
};

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(ib_version() != nullptr);
  CHECK(rel_eq(ib_default_capture_factor(), 2.598076211353316, 1e-15));
}

TEST_CASE("quantity handles") {
  QuantityGuard q("0.1 m");
  double mag = 0.0;
  CHECK(ib_quantity_magnitude(q.q, &mag) == IB_OK);
  CHECK(mag == 0.1);

  int exp[4] = {9, 9, 9, 9};
  CHECK(ib_quantity_exponents(q.q, exp) == IB_OK);
  CHECK(exp[0] == 0);
  CHECK(exp[1] == 1);
  CHECK(exp[2] == 0);
  CHECK(exp[3] == 0);

  double cm = 0.0;
  CHECK(ib_quantity_value_in(q.q, "cm", &cm) == IB_OK);
  CHECK(rel_eq(cm, 10.0, 1e-12));

  char* text = nullptr;
  CHECK(ib_quantity_render(q.q, 6, &text) == IB_OK);
  CHECK(std::string(text) == "0.1 * m");
  ib_string_free(text);

  ib_quantity* made = nullptr;
  int momentum[4] = {1, 1, -1, 0};
  CHECK(ib_quantity_make(2.5, momentum, &made) == IB_OK);
  CHECK(ib_quantity_render(made, 6, &text) == IB_OK);
  CHECK(std::string(text) == "2.5 * kg * m * s^-1");
  ib_string_free(text);
  ib_quantity_free(made);

  CHECK(ib_quantity_make(NAN, momentum, &made) == IB_ERROR_OVERFLOW);
}

TEST_CASE("error codes and thread-local messages") {
  ib_quantity* q = nullptr;

  CHECK(ib_quantity_parse("1 $", &q) == IB_ERROR_PARSE);
  CHECK(std::strlen(ib_last_error_message()) > 0);
  CHECK(ib_last_error_offset() == 2);

  CHECK(ib_quantity_parse("1 m + 1 J", &q) == IB_ERROR_DIMENSION);
  CHECK(ib_last_error_offset() == 0);
  CHECK(std::string(ib_last_error_message()).find("dimension mismatch") !=
        std::string::npos);

  CHECK(ib_quantity_parse("1 / (0 * s)", &q) == IB_ERROR_DOMAIN);

  CHECK(ib_quantity_parse(nullptr, &q) == IB_ERROR_INVALID_ARGUMENT);
  CHECK(ib_quantity_parse("1 m", nullptr) == IB_ERROR_INVALID_ARGUMENT);

  // success clears the error state
  QuantityGuard ok("1 m");
  CHECK(std::strlen(ib_last_error_message()) == 0);
  CHECK(ib_last_error_offset() == -1);

  double out = 0.0;
  QuantityGuard j("1 J");
  CHECK(ib_quantity_value_in(j.q, "m", &out) == IB_ERROR_DIMENSION);
}

TEST_CASE("black hole handles") {
  QuantityGuard mass("1e30 kg");
  ib_blackhole* bh = nullptr;
  REQUIRE(ib_blackhole_from_mass(mass.q, &bh) == IB_OK);

  ib_blackhole_info info;
  CHECK(ib_blackhole_get_info(bh, ib_default_capture_factor(), &info) ==
        IB_OK);
  CHECK(rel_eq(info.mass_kg, 1e30, 1e-15));
  CHECK(rel_eq(info.radius_m, 1485.2320538237331, 1e-12));
  CHECK(rel_eq(info.horizon_area_m2, 27720336.055560393, 1e-12));
  CHECK(rel_eq(info.entropy_si, 3.6627055485334265e53, 1e-12));
  CHECK(rel_eq(info.capture_cross_section_m2, 46778067.093758164, 1e-12));
  CHECK(rel_eq(info.min_bit_energy_j, 4.0965727185621999e-30, 1e-12));
  CHECK(rel_eq(info.min_capture_momentum_si, 1.3664695722806342e-38, 1e-12));

  CHECK(ib_blackhole_get_info(bh, -1.0, &info) == IB_ERROR_DOMAIN);

  QuantityGuard dm("1 kg");
  double ds = 0.0;
  CHECK(ib_blackhole_entropy_increase(bh, dm.q, &ds) == IB_OK);
  CHECK(rel_eq(ds, 7.3254110970668531e23, 1e-12));
  ib_blackhole_free(bh);

  QuantityGuard r("1485.2320538237331 m");
  ib_blackhole* from_r = nullptr;
  REQUIRE(ib_blackhole_from_radius(r.q, &from_r) == IB_OK);
  CHECK(ib_blackhole_get_info(from_r, 1.0, &info) == IB_OK);
  CHECK(rel_eq(info.mass_kg, 1e30, 1e-12));
  ib_blackhole_free(from_r);

  QuantityGuard bad("-1 kg");
  CHECK(ib_blackhole_from_mass(bad.q, &from_r) == IB_ERROR_DOMAIN);
  QuantityGuard wrong_dim("1 m");
  CHECK(ib_blackhole_from_mass(wrong_dim.q, &from_r) == IB_ERROR_DIMENSION);
}

TEST_CASE("bound helpers") {
  QuantityGuard length("0.1 m");
  double bits = 0.0;
  CHECK(ib_bekenstein_hawking_bits(length.q, &bits) == IB_OK);
  CHECK(rel_eq(bits, 4.3375515013939246e67, 1e-12));

  double floor = 0.0;
  CHECK(ib_landauer_floor(2.0 * std::numbers::pi, &floor) == IB_OK);
  CHECK(floor == 1.380649e-23);
  CHECK(ib_landauer_floor(0.0, &floor) == IB_ERROR_DOMAIN);

  double erasure = 0.0;
  CHECK(ib_landauer_erasure_entropy(1.0, &erasure) == IB_OK);
  CHECK(rel_eq(erasure, 9.5699296169290793e-24, 1e-12));
  CHECK(ib_landauer_erasure_entropy(-2.0, &erasure) == IB_ERROR_DOMAIN);

  double m_min = 0.0;
  CHECK(ib_min_absorbing_mass_kg(length.q, &m_min) == IB_OK);
  CHECK(rel_eq(m_min, 3.3664773037502721e25, 1e-12));
}

TEST_CASE("bound report for the device example") {
  QuantityGuard length("0.1 m");
  QuantityGuard mass("1 kg");
  QuantityGuard entropy("1e23 kB");

  ib_bound_report report;
  REQUIRE(ib_compute_bound_report(length.q, nullptr, mass.q, entropy.q,
                                  ib_default_capture_factor(),
                                  &report) == IB_OK);
  CHECK(rel_eq(report.energy_j, 8.987551787368176e16, 1e-12));
  CHECK(rel_eq(report.bh_limit_bits, 4.3375515013939246e67, 1e-12));
  CHECK(rel_eq(report.storage.term_quadratic, 2.6528868296963432e16, 1e-12));
  CHECK(rel_eq(report.storage.term_entropy, 1e23, 1e-12));
  CHECK(rel_eq(report.storage.term_linear, 1.7861766603181505e42, 1e-12));
  CHECK(rel_eq(report.storage.n_max_bits, 2.5769082099926063e42, 1e-12));
  CHECK(rel_eq(report.storage.min_mass_kg, 3.3664773037502721e25, 1e-12));
  CHECK(report.has_log10_gap == 1);
  CHECK(rel_eq(report.log10_gap, 25.226145695206152, 1e-9));
  CHECK(report.infeasible == 0);

  // exactly one of energy and mass
  CHECK(ib_compute_bound_report(length.q, nullptr, nullptr, nullptr, 2.0,
                                &report) == IB_ERROR_INVALID_ARGUMENT);

  double slack = 0.0;
  QuantityGuard energy("1 kg * c^2");
  ib_blackhole* bh = nullptr;
  QuantityGuard m_min_mass("3.3664773037502721e25 kg");
  REQUIRE(ib_blackhole_from_mass(m_min_mass.q, &bh) == IB_OK);
  CHECK(ib_absorption_slack(length.q, energy.q, entropy.q,
                            ib_default_capture_factor(), 1e42, bh,
                            &slack) == IB_OK);
  CHECK(rel_eq(slack, 1.0930294797582052e42, 1e-12));
  ib_blackhole_free(bh);
}

TEST_CASE("scenario reports through the C surface") {
  ib_report* report = nullptr;
  REQUIRE(ib_report_load_json(kPaperExamples, &report) == IB_OK);

  size_t count = 0;
  CHECK(ib_report_size(report, &count) == IB_OK);
  CHECK(count == 2);

  char* name = nullptr;
  CHECK(ib_report_entry_name(report, 0, &name) == IB_OK);
  CHECK(std::string(name) == "device");
  ib_string_free(name);

  ib_bound_report pulse;
  CHECK(ib_report_entry(report, 1, &pulse) == IB_OK);
  CHECK(rel_eq(pulse.storage.n_max_bits, 2867197064293302.9, 1e-12));
  CHECK(rel_eq(pulse.bh_limit_bits, 4.3375515013939246e57, 1e-12));

  CHECK(ib_report_entry(report, 2, &pulse) == IB_ERROR_INVALID_ARGUMENT);

  char* json_text = nullptr;
  CHECK(ib_report_render(report, IB_FORMAT_JSON, &json_text) == IB_OK);
  CHECK(std::string(json_text).find("\"n_max_bits\"") != std::string::npos);
  ib_string_free(json_text);

  char* table = nullptr;
  CHECK(ib_report_render(report, IB_FORMAT_TABLE, &table) == IB_OK);
  std::string table_text(table);
  ib_string_free(table);
  int lines = 0;
  for (char c : table_text)
    if (c == '\n') ++lines;
  CHECK(lines == 3);

  ib_report_free(report);

  CHECK(ib_report_load_json("{ nope", &report) == IB_ERROR_SCHEMA);
  CHECK(ib_report_load_file("/nonexistent/file.json", &report) ==
        IB_ERROR_IO);
}
