/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "infobound/infobound.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "bounds.hpp"
#include "constants.hpp"
#include "qparser.hpp"
#include "scenarios.hpp"
#include "schwarzschild.hpp"

struct ib_quantity {
  infobound::Quantity value;
};

struct ib_blackhole {
  infobound::BlackHole hole;
};

struct ib_report {
  std::vector<infobound::BoundReport> entries;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

void clear_error() {
  g_last_error.clear();
  g_last_offset = -1;
}

ib_status fail(ib_status status, const char* message) {
  g_last_error = message;
  g_last_offset = -1;
  return status;
}

ib_status map_error(const infobound::Error& e) {
  g_last_error = e.what();
  g_last_offset = e.has_location() ? static_cast<long>(e.offset()) : -1;
  switch (e.code()) {
    case infobound::errc::parse: return IB_ERROR_PARSE;
    case infobound::errc::dimension: return IB_ERROR_DIMENSION;
    case infobound::errc::domain: return IB_ERROR_DOMAIN;
    case infobound::errc::overflow: return IB_ERROR_OVERFLOW;
    case infobound::errc::schema: return IB_ERROR_SCHEMA;
    case infobound::errc::io: return IB_ERROR_IO;
    case infobound::errc::internal: return IB_ERROR_INTERNAL;
  }
  return IB_ERROR_INTERNAL;
}

/// Runs `body`, translating exceptions into status codes.
template <typename Fn>
ib_status guarded(Fn&& body) {
  clear_error();
  try {
    return body();
  } catch (const infobound::Error& e) {
    return map_error(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IB_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IB_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ib_storage_bound to_c(const infobound::StorageBoundBreakdown& b) {
  ib_storage_bound out;
  out.term_quadratic = b.term_quadratic;
  out.term_entropy = b.term_entropy;
  out.term_linear = b.term_linear;
  out.min_mass_kg = b.min_mass.magnitude();
  out.raw_rhs_bits = b.raw_rhs_bits;
  out.n_max_bits = b.n_max_bits;
  out.infeasible = b.infeasible ? 1 : 0;
  return out;
}

ib_bound_report to_c(const infobound::BoundReport& r) {
  ib_bound_report out;
  out.length_m = r.length.magnitude();
  out.energy_j = r.energy.magnitude();
  out.entropy_si = r.entropy.magnitude();
  out.mu = r.mu;
  out.bh_limit_bits = r.bh_limit_bits;
  out.storage = to_c(r.breakdown);
  out.landauer_floor_si = r.landauer_floor_entropy.magnitude();
  out.has_log10_gap = r.log10_gap.has_value() ? 1 : 0;
  out.log10_gap = r.log10_gap.value_or(0.0);
  out.infeasible = r.infeasible ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* ib_version(void) { return "1.0.0"; }

double ib_default_capture_factor(void) {
  return infobound::relativistic_capture_factor;
}

const char* ib_last_error_message(void) { return g_last_error.c_str(); }

long ib_last_error_offset(void) { return g_last_offset; }

void ib_string_free(char* s) { delete[] s; }

ib_status ib_quantity_parse(const char* text, ib_quantity** out) {
  if (!text || !out)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ib_quantity{infobound::eval_expression(text)};
    return IB_OK;
  });
}

ib_status ib_quantity_make(double magnitude, const int exponents[4],
                           ib_quantity** out) {
  if (!exponents || !out)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    infobound::Dimension d{exponents[0], exponents[1], exponents[2],
                           exponents[3]};
    *out = new ib_quantity{infobound::Quantity(magnitude, d)};
    return IB_OK;
  });
}

void ib_quantity_free(ib_quantity* q) { delete q; }

ib_status ib_quantity_magnitude(const ib_quantity* q, double* out) {
  if (!q || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  *out = q->value.magnitude();
  return IB_OK;
}

ib_status ib_quantity_exponents(const ib_quantity* q, int out[4]) {
  if (!q || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  const auto& e = q->value.dimension().exponents();
  for (int i = 0; i < 4; ++i) out[i] = e[i];
  return IB_OK;
}

ib_status ib_quantity_value_in(const ib_quantity* q,
                               const char* unit_expression, double* out) {
  if (!q || !unit_expression || !out)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = infobound::value_in(q->value, unit_expression);
    return IB_OK;
  });
}

ib_status ib_quantity_render(const ib_quantity* q, int significant_digits,
                             char** out) {
  if (!q || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  if (significant_digits < 1 || significant_digits > 17)
    return fail(IB_ERROR_INVALID_ARGUMENT,
                "significant_digits must be in [1, 17]");
  return guarded([&] {
    *out = copy_string(infobound::render(q->value, significant_digits));
    return IB_OK;
  });
}

ib_status ib_blackhole_from_mass(const ib_quantity* mass, ib_blackhole** out) {
  if (!mass || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ib_blackhole{infobound::BlackHole(mass->value)};
    return IB_OK;
  });
}

ib_status ib_blackhole_from_radius(const ib_quantity* radius,
                                   ib_blackhole** out) {
  if (!radius || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ib_blackhole{infobound::mass_from_radius(radius->value)};
    return IB_OK;
  });
}

void ib_blackhole_free(ib_blackhole* bh) { delete bh; }

ib_status ib_blackhole_get_info(const ib_blackhole* bh, double mu,
                                ib_blackhole_info* out) {
  if (!bh || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const infobound::BlackHole& hole = bh->hole;
    out->mass_kg = hole.mass().magnitude();
    out->radius_m = infobound::radius(hole).magnitude();
    out->horizon_area_m2 = infobound::horizon_area(hole).magnitude();
    out->entropy_si = infobound::entropy(hole).magnitude();
    out->capture_cross_section_m2 =
        infobound::capture_cross_section(hole, mu).magnitude();
    out->min_bit_energy_j = infobound::min_bit_energy(hole, mu).magnitude();
    out->min_capture_momentum_si =
        infobound::min_capture_momentum(hole, mu).magnitude();
    return IB_OK;
  });
}

ib_status ib_blackhole_entropy_increase(const ib_blackhole* bh,
                                        const ib_quantity* delta_mass,
                                        double* out_si) {
  if (!bh || !delta_mass || !out_si)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_si =
        infobound::entropy_increase(bh->hole, delta_mass->value).magnitude();
    return IB_OK;
  });
}

ib_status ib_bekenstein_hawking_bits(const ib_quantity* length, double* out) {
  if (!length || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = infobound::bekenstein_hawking_limit(length->value);
    return IB_OK;
  });
}

ib_status ib_landauer_floor(double mu, double* out_si) {
  if (!out_si) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_si = infobound::landauer_floor(mu).magnitude();
    return IB_OK;
  });
}

ib_status ib_landauer_erasure_entropy(double n_bits, double* out_si) {
  if (!out_si) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_si = infobound::landauer_erasure_entropy(n_bits).magnitude();
    return IB_OK;
  });
}

ib_status ib_min_absorbing_mass_kg(const ib_quantity* length, double* out) {
  if (!length || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = infobound::min_absorbing_mass(length->value).mass().magnitude();
    return IB_OK;
  });
}

ib_status ib_absorption_slack(const ib_quantity* length,
                              const ib_quantity* energy,
                              const ib_quantity* entropy, double mu,
                              double n_bits, const ib_blackhole* bh,
                              double* out) {
  if (!length || !energy || !entropy || !bh || !out)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    infobound::SystemSpec spec(length->value, energy->value, entropy->value,
                               mu);
    *out = infobound::absorption_inequality_slack(spec, n_bits, bh->hole);
    return IB_OK;
  });
}

ib_status ib_compute_bound_report(const ib_quantity* length,
                                  const ib_quantity* energy,
                                  const ib_quantity* mass,
                                  const ib_quantity* entropy, double mu,
                                  ib_bound_report* out) {
  if (!length || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  if ((energy == nullptr) == (mass == nullptr))
    return fail(IB_ERROR_INVALID_ARGUMENT,
                "exactly one of energy and mass is required");
  return guarded([&] {
    infobound::Scenario s;
    s.name = "";
    s.length = length->value;
    if (energy) {
      s.energy = energy->value;
    } else {
      if (mass->value.dimension() != infobound::dim::mass)
        throw infobound::Error(infobound::errc::dimension,
                               "mass: expected mass, got " +
                                   mass->value.dimension().str());
      s.energy =
          mass->value * infobound::pow_int(infobound::constants().c, 2);
    }
    s.entropy = entropy ? entropy->value
                        : infobound::Quantity(0.0, infobound::dim::entropy);
    s.mu = mu;
    *out = to_c(infobound::report_for(s));
    return IB_OK;
  });
}

ib_status ib_report_load_file(const char* path, ib_report** out) {
  if (!path || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    infobound::ScenarioFile file = infobound::load_scenarios_file(path);
    *out = new ib_report{infobound::evaluate(file)};
    return IB_OK;
  });
}

ib_status ib_report_load_json(const char* json_text, ib_report** out) {
  if (!json_text || !out)
    return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    infobound::ScenarioFile file = infobound::load_scenarios_text(json_text);
    *out = new ib_report{infobound::evaluate(file)};
    return IB_OK;
  });
}

void ib_report_free(ib_report* report) { delete report; }

ib_status ib_report_size(const ib_report* report, size_t* out) {
  if (!report || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  *out = report->entries.size();
  return IB_OK;
}

ib_status ib_report_entry(const ib_report* report, size_t index,
                          ib_bound_report* out) {
  if (!report || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  if (index >= report->entries.size())
    return fail(IB_ERROR_INVALID_ARGUMENT, "report index out of range");
  *out = to_c(report->entries[index]);
  return IB_OK;
}

ib_status ib_report_entry_name(const ib_report* report, size_t index,
                               char** out) {
  if (!report || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  if (index >= report->entries.size())
    return fail(IB_ERROR_INVALID_ARGUMENT, "report index out of range");
  *out = copy_string(report->entries[index].name);
  return IB_OK;
}

ib_status ib_report_render(const ib_report* report, ib_format format,
                           char** out) {
  if (!report || !out) return fail(IB_ERROR_INVALID_ARGUMENT, "null argument");
  if (format != IB_FORMAT_TABLE && format != IB_FORMAT_JSON)
    return fail(IB_ERROR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    *out = copy_string(infobound::render(
        report->entries, format == IB_FORMAT_JSON
                             ? infobound::ReportFormat::json
                             : infobound::ReportFormat::table));
    return IB_OK;
  });
}

}  // extern "C"
