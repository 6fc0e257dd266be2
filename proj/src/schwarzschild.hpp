/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "quantity.hpp"

namespace infobound {

/// Capture factor for relativistic carriers, sqrt(27/4). The effective
/// capture cross section of a hole of horizon radius R is pi mu^2 R^2; mu is
/// an order-unity geometric constant and stays a parameter everywhere.
inline constexpr double relativistic_capture_factor = 2.5980762113533159;

/// A Schwarzschild (non-rotating, uncharged) black hole of positive mass.
class BlackHole {
public:
  explicit BlackHole(Quantity mass);
  const Quantity& mass() const { return mass_; }

private:
  Quantity mass_;
};

/// Horizon radius R = 2GM/c^2.
Quantity radius(const BlackHole& bh);

/// The hole whose horizon radius is `r`: M = c^2 r / (2G).
BlackHole mass_from_radius(const Quantity& r);

/// Horizon area A = 4 pi R^2.
Quantity horizon_area(const BlackHole& bh);

/// Bekenstein-Hawking entropy, computed in the mass form
/// S = k_B 4 pi G M^2 / (c hbar); identical to k_B c^3 A / (4 G hbar).
Quantity entropy(const BlackHole& bh);

/// First-order entropy increment for a mass gain dM:
/// dS = k_B 8 pi G M dM / (c hbar). The exact difference is available as
/// entropy(M + dM) - entropy(M).
Quantity entropy_increase(const BlackHole& bh, const Quantity& delta_mass);

/// Smallest momentum a system must carry for its reduced de Broglie
/// wavelength hbar/p to fit inside the effective horizon diameter 2 R mu:
/// p_min = hbar / (2 R mu). The underlying relation is an order-of-magnitude
/// one; this evaluates its extremal case exactly.
Quantity min_capture_momentum(const BlackHole& bh, double mu);

/// Minimum total energy of a one-bit carrier that the hole is guaranteed to
/// swallow: e_min = c p_min = c hbar / (2 R mu).
Quantity min_bit_energy(const BlackHole& bh, double mu);

/// Effective capture cross section pi mu^2 R^2.
Quantity capture_cross_section(const BlackHole& bh, double mu);

/// A system falling into a hole, with total energy e and rest mass m0
/// satisfying e >= m0 c^2.
class InfallingSystem {
public:
  InfallingSystem(Quantity energy, Quantity rest_mass);
  const Quantity& energy() const { return energy_; }
  const Quantity& rest_mass() const { return rest_mass_; }

private:
  Quantity energy_;
  Quantity rest_mass_;
};

/// Relativistic momentum p = sqrt(e^2/c^2 - m0^2 c^2); always <= e/c.
Quantity momentum(const InfallingSystem& sys);

}  // namespace infobound
