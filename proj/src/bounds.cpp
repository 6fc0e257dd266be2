/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bounds.hpp"

#include <cmath>
#include <numbers>

#include "constants.hpp"

namespace infobound {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;

void require_dimension(const Quantity& q, const Dimension& want,
                       const char* what) {
  if (q.dimension() != want)
    throw Error(errc::dimension, std::string(what) + ": expected " +
                                     want.str() + ", got " +
                                     q.dimension().str());
}

void require_positive_length(const Quantity& length) {
  require_dimension(length, dim::length, "system extent");
  if (!(length.magnitude() > 0.0))
    throw Error(errc::domain, "system extent must be positive");
}

void require_bit_count(double n_bits) {
  if (!(n_bits >= 0.0) || !std::isfinite(n_bits))
    throw Error(errc::domain, "bit count must be non-negative");
}

/// Evaluates a Quantity that must come out dimensionless.
double dimensionless_value(const Quantity& q, const char* what) {
  if (!q.dimensionless())
    throw Error(errc::internal, std::string(what) + " is not dimensionless (" +
                                    q.dimension().str() + ")");
  return q.magnitude();
}

}  // namespace

SystemSpec::SystemSpec(Quantity length, Quantity energy, Quantity entropy,
                       double mu)
    : length_(length), energy_(energy), entropy_(entropy), mu_(mu) {
  require_positive_length(length);
  require_dimension(energy, dim::energy, "system energy");
  if (energy.magnitude() < 0.0)
    throw Error(errc::domain, "system energy must be non-negative");
  require_dimension(entropy, dim::entropy, "system entropy");
  if (entropy.magnitude() < 0.0)
    throw Error(errc::domain, "system entropy must be non-negative");
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw Error(errc::domain, "capture factor mu must be positive");
}

double bekenstein_hawking_limit(const Quantity& length) {
  require_positive_length(length);
  const auto& k = constants();
  // largest hole in a bounding sphere of diameter L: A = pi L^2
  Quantity area = pi * pow_int(length, 2);
  Quantity s_max = k.k_B * pow_int(k.c, 3) * area / (4.0 * k.G * k.hbar);
  return dimensionless_value(s_max / (k.k_B * ln2),
                             "Bekenstein-Hawking bit count");
}

Quantity landauer_erasure_entropy(double n_bits) {
  require_bit_count(n_bits);
  return n_bits * ln2 * constants().k_B;
}

Quantity landauer_floor(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw Error(errc::domain, "capture factor mu must be positive");
  return (2.0 * pi / mu) * constants().k_B;
}

BlackHole min_absorbing_mass(const Quantity& length) {
  require_positive_length(length);
  const auto& k = constants();
  return BlackHole(pow_int(k.c, 2) * length / (4.0 * k.G));
}

namespace {

/// The three M-independent terms plus the M-linear term of the second-law
/// inequality, all dimensionless.
struct InequalityTerms {
  double quadratic;  // 4 pi G U^2 / (c^5 hbar)
  double entropy;    // S / k_B
  double linear_m;   // 8 pi G M U / (c^3 hbar)
};

InequalityTerms inequality_terms(const Quantity& energy,
                                 const Quantity& entropy,
                                 const Quantity& hole_mass) {
  const auto& k = constants();
  Quantity quadratic =
      4.0 * pi * k.G * pow_int(energy, 2) / (pow_int(k.c, 5) * k.hbar);
  Quantity entropy_term = entropy / k.k_B;
  Quantity linear =
      8.0 * pi * k.G * hole_mass * energy / (pow_int(k.c, 3) * k.hbar);
  return {dimensionless_value(quadratic, "quadratic term"),
          dimensionless_value(entropy_term, "entropy term"),
          dimensionless_value(linear, "mass-linear term")};
}

}  // namespace

double absorption_inequality_slack(const SystemSpec& spec, double n_bits,
                                   const BlackHole& bh) {
  require_bit_count(n_bits);
  InequalityTerms t = inequality_terms(spec.energy(), spec.entropy(),
                                       bh.mass());
  return t.quadratic - t.entropy + t.linear_m - n_bits * ln2;
}

StorageBoundBreakdown storage_bound_bits(const SystemSpec& spec) {
  const auto& k = constants();
  BlackHole m_min = min_absorbing_mass(spec.length());
  InequalityTerms t =
      inequality_terms(spec.energy(), spec.entropy(), m_min.mass());

  // with the horizon diameter pinned to L the mass-linear term reduces to
  // 2 pi L U / (c hbar); both routes must agree
  Quantity linear_direct =
      2.0 * pi * spec.length() * spec.energy() / (k.c * k.hbar);
  double term_linear = dimensionless_value(linear_direct, "linear term");
  if (t.linear_m != 0.0 || term_linear != 0.0) {
    double rel = std::abs(term_linear - t.linear_m) /
                 std::max(std::abs(term_linear), std::abs(t.linear_m));
    if (!(rel < 1e-12))
      throw Error(errc::internal,
                  "mass-linear term disagrees with its reduced form");
  }

  StorageBoundBreakdown out;
  out.term_quadratic = t.quadratic;
  out.term_entropy = t.entropy;
  out.term_linear = term_linear;
  out.min_mass = m_min.mass();
  out.raw_rhs_bits = t.quadratic - t.entropy + term_linear;
  out.infeasible = out.raw_rhs_bits < 0.0;
  out.n_max_bits = out.infeasible ? 0.0 : out.raw_rhs_bits / ln2;
  return out;
}

}  // namespace infobound
