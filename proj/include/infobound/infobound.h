/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* infobound C API.
 *
 * Thermodynamic limits on information storage and erasure: the areal
 * (Bekenstein-Hawking) bound, the per-bit erasure floor obtained from
 * dropping a bit into a Schwarzschild hole, and the energy/size/entropy
 * storage bound, over dimension-checked physical quantities with a textual
 * expression language ("1 GW * 10 fs", "1e23 kB", "c^2").
 *
 * Every function returns an ib_status; results travel through out
 * parameters. On failure the thread-local message ib_last_error_message()
 * describes what went wrong (for expression errors it embeds a byte offset,
 * also available via ib_last_error_offset). Handles are opaque; free them
 * with their matching *_free function. Strings returned through char** are
 * heap-allocated; release them with ib_string_free.
 */

#ifndef INFOBOUND_INFOBOUND_H
#define INFOBOUND_INFOBOUND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ib_status {
  IB_OK = 0,
  IB_ERROR_PARSE = 1,      /* lexical or syntax error in an expression */
  IB_ERROR_DIMENSION = 2,  /* operands with incompatible dimensions */
  IB_ERROR_DOMAIN = 3,     /* value outside an operation's domain */
  IB_ERROR_OVERFLOW = 4,   /* magnitude left the finite double range */
  IB_ERROR_SCHEMA = 5,     /* scenario file fails validation */
  IB_ERROR_IO = 6,         /* file could not be opened or read */
  IB_ERROR_INVALID_ARGUMENT = 7, /* null pointer or bad argument */
  IB_ERROR_INTERNAL = 8
} ib_status;

typedef enum ib_format {
  IB_FORMAT_TABLE = 0,
  IB_FORMAT_JSON = 1
} ib_format;

/* A magnitude in SI base units together with its dimension, an integer
 * exponent vector over (mass, length, time, temperature). */
typedef struct ib_quantity ib_quantity;

/* A Schwarzschild black hole of positive mass. */
typedef struct ib_blackhole ib_blackhole;

/* An evaluated scenario file: one bound report per scenario. */
typedef struct ib_report ib_report;

const char* ib_version(void);

/* Capture factor for relativistic carriers, sqrt(27/4). */
double ib_default_capture_factor(void);

/* Message for the most recent failure on this thread; empty string when the
 * last call succeeded. */
const char* ib_last_error_message(void);

/* Byte offset of the most recent expression error, or -1 if the last error
 * carried no source location. */
long ib_last_error_offset(void);

void ib_string_free(char* s);

/* --- quantities ------------------------------------------------------- */

/* Parses and evaluates a quantity expression such as "0.1 m" or
 * "1 GW * 10 fs". */
ib_status ib_quantity_parse(const char* text, ib_quantity** out);

/* Builds a quantity from raw parts; exponents order is
 * (mass, length, time, temperature). */
ib_status ib_quantity_make(double magnitude, const int exponents[4],
                           ib_quantity** out);

void ib_quantity_free(ib_quantity* q);

ib_status ib_quantity_magnitude(const ib_quantity* q, double* out);
ib_status ib_quantity_exponents(const ib_quantity* q, int out[4]);

/* Value of q in the unit named by unit_expression ("uJ", "J / K", "bit");
 * dimensions must match. */
ib_status ib_quantity_value_in(const ib_quantity* q,
                               const char* unit_expression, double* out);

/* Canonical re-parseable text, e.g. "2.5 * kg * m^2 * s^-2". */
ib_status ib_quantity_render(const ib_quantity* q, int significant_digits,
                             char** out);

/* --- Schwarzschild holes ---------------------------------------------- */

typedef struct ib_blackhole_info {
  double mass_kg;
  double radius_m;                  /* 2GM/c^2 */
  double horizon_area_m2;           /* 4 pi R^2 */
  double entropy_si;                /* k_B 4 pi G M^2/(c hbar), J/K */
  double capture_cross_section_m2;  /* pi mu^2 R^2 */
  double min_bit_energy_j;          /* c hbar/(2 R mu) */
  double min_capture_momentum_si;   /* hbar/(2 R mu), kg m/s */
} ib_blackhole_info;

ib_status ib_blackhole_from_mass(const ib_quantity* mass, ib_blackhole** out);
ib_status ib_blackhole_from_radius(const ib_quantity* radius,
                                   ib_blackhole** out);
void ib_blackhole_free(ib_blackhole* bh);

ib_status ib_blackhole_get_info(const ib_blackhole* bh, double mu,
                                ib_blackhole_info* out);

/* First-order entropy increment k_B 8 pi G M dM/(c hbar) in J/K for a mass
 * gain delta_mass. */
ib_status ib_blackhole_entropy_increase(const ib_blackhole* bh,
                                        const ib_quantity* delta_mass,
                                        double* out_si);

/* --- bounds ------------------------------------------------------------ */

typedef struct ib_storage_bound {
  double term_quadratic; /* 4 pi G U^2/(c^5 hbar) */
  double term_entropy;   /* S/k_B */
  double term_linear;    /* 2 pi L U/(c hbar) */
  double min_mass_kg;    /* hole with horizon diameter L */
  double raw_rhs_bits;   /* term_quadratic - term_entropy + term_linear */
  double n_max_bits;     /* max(0, raw_rhs_bits / ln 2) */
  int infeasible;        /* raw RHS < 0 */
} ib_storage_bound;

typedef struct ib_bound_report {
  double length_m;
  double energy_j;
  double entropy_si;
  double mu;
  double bh_limit_bits;
  ib_storage_bound storage;
  double landauer_floor_si; /* (2 pi/mu) k_B, J/K */
  double log10_gap;         /* meaningful only when has_log10_gap != 0 */
  int has_log10_gap;        /* set exactly when n_max_bits > 0 */
  int infeasible;
} ib_bound_report;

/* Areal limit in bits for a system of extent `length`:
 * pi c^3 L^2/(4 hbar G ln 2). */
ib_status ib_bekenstein_hawking_bits(const ib_quantity* length, double* out);

/* Per-bit erasure floor (2 pi/mu) k_B in J/K. */
ib_status ib_landauer_floor(double mu, double* out_si);

/* Entropy cost n k_B ln 2 of erasing n bits, in J/K. */
ib_status ib_landauer_erasure_entropy(double n_bits, double* out_si);

/* Mass of the smallest hole able to swallow a system of extent `length`
 * (horizon diameter = L). */
ib_status ib_min_absorbing_mass_kg(const ib_quantity* length, double* out);

/* Dimensionless second-law slack for a system (length, energy, entropy, mu)
 * carrying n_bits thrown into hole bh. */
ib_status ib_absorption_slack(const ib_quantity* length,
                              const ib_quantity* energy,
                              const ib_quantity* entropy, double mu,
                              double n_bits, const ib_blackhole* bh,
                              double* out);

/* Full bound report for one system. Exactly one of `energy` and `mass` must
 * be non-null (mass is converted to rest energy); `entropy` may be null for
 * zero; mu must be positive (use ib_default_capture_factor()). */
ib_status ib_compute_bound_report(const ib_quantity* length,
                                  const ib_quantity* energy,
                                  const ib_quantity* mass,
                                  const ib_quantity* entropy, double mu,
                                  ib_bound_report* out);

/* --- scenario reports --------------------------------------------------- */

/* Loads a scenario file (see README for the JSON schema), validates it and
 * evaluates every scenario. */
ib_status ib_report_load_file(const char* path, ib_report** out);
ib_status ib_report_load_json(const char* json_text, ib_report** out);
void ib_report_free(ib_report* report);

ib_status ib_report_size(const ib_report* report, size_t* out);
ib_status ib_report_entry(const ib_report* report, size_t index,
                          ib_bound_report* out);
ib_status ib_report_entry_name(const ib_report* report, size_t index,
                               char** out);

/* Renders all entries as a fixed-width table or as JSON. */
ib_status ib_report_render(const ib_report* report, ib_format format,
                           char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INFOBOUND_INFOBOUND_H */
