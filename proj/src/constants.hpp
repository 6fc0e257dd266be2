/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "quantity.hpp"

namespace infobound {

/// The four constants every formula in this library is built from, in SI.
/// c, h and k_B are the exact 2019-redefinition values (hbar is derived as
/// h/2pi); G is the CODATA-2018 recommended value and the only measured one.
struct PhysicalConstants {
  Quantity c;     // speed of light in vacuum, m s^-1
  Quantity hbar;  // reduced Planck constant, J s
  Quantity G;     // Newtonian constant of gravitation, m^3 kg^-1 s^-2
  Quantity k_B;   // Boltzmann constant, J K^-1
};

/// Immutable process-wide table. Constants live here rather than inside the
/// formulas so tests can evaluate algebraic identities with round values.
const PhysicalConstants& constants();

}  // namespace infobound
