/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "quantity.hpp"
#include "schwarzschild.hpp"

namespace infobound {

/// An encoding system: spatial extent L, total energy U (including rest-mass
/// and thermal energy), intrinsic thermodynamic entropy S, and the geometric
/// capture factor mu.
class SystemSpec {
public:
  SystemSpec(Quantity length, Quantity energy, Quantity entropy,
             double mu = relativistic_capture_factor);

  const Quantity& length() const { return length_; }
  const Quantity& energy() const { return energy_; }
  const Quantity& entropy() const { return entropy_; }
  double mu() const { return mu_; }

private:
  Quantity length_;
  Quantity energy_;
  Quantity entropy_;
  double mu_;
};

/// Term-by-term storage bound for one SystemSpec. The dimensionless right
/// hand side is term_quadratic - term_entropy + term_linear; n_max_bits
/// divides it by ln 2 and floors at zero. raw_rhs_bits keeps the undivided,
/// unfloored value for order-of-magnitude comparisons.
struct StorageBoundBreakdown {
  double term_quadratic = 0.0;  // 4 pi G U^2 / (c^5 hbar)
  double term_entropy = 0.0;    // S / k_B
  double term_linear = 0.0;     // 2 pi L U / (c hbar)
  Quantity min_mass;            // smallest hole that can swallow the system
  double raw_rhs_bits = 0.0;    // term_quadratic - term_entropy + term_linear
  double n_max_bits = 0.0;      // max(0, raw_rhs_bits / ln 2)
  bool infeasible = false;      // raw RHS < 0: claimed S exceeds the budget
};

/// Areal (Bekenstein-Hawking) limit in bits for a system of spatial extent
/// L: the entropy of the largest hole fitting in a bounding sphere of
/// diameter L, pi c^3 L^2 / (4 hbar G ln 2).
double bekenstein_hawking_limit(const Quantity& length);

/// Entropy cost of erasing n bits: n k_B ln 2.
Quantity landauer_erasure_entropy(double n_bits);

/// Per-bit erasure floor derived from bit infall: (2 pi / mu) k_B. The
/// hole's mass cancels, so this depends on mu alone.
Quantity landauer_floor(double mu);

/// Smallest hole able to swallow a system of extent L: horizon diameter
/// equal to L, i.e. M_min = c^2 L / (4G).
BlackHole min_absorbing_mass(const Quantity& length);

/// Dimensionless second-law margin when a system carrying n bits falls into
/// the hole: [4 pi G U^2/(c^5 hbar) - S/k_B + 8 pi G M U/(c^3 hbar)]
/// - n ln 2, from the exact expansion of the final entropy. Non-negative
/// slack means the configuration is consistent; larger M loosens the bound.
double absorption_inequality_slack(const SystemSpec& spec, double n_bits,
                                   const BlackHole& bh);

/// The storage bound at the tightest member of the family, M = M_min.
StorageBoundBreakdown storage_bound_bits(const SystemSpec& spec);

}  // namespace infobound
