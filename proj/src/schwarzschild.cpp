/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "schwarzschild.hpp"

#include <cmath>
#include <numbers>

#include "constants.hpp"

namespace infobound {

namespace {

constexpr double pi = std::numbers::pi;

void require_dimension(const Quantity& q, const Dimension& want,
                       const char* what) {
  if (q.dimension() != want)
    throw Error(errc::dimension, std::string(what) + ": expected " +
                                     want.str() + ", got " +
                                     q.dimension().str());
}

void require_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw Error(errc::domain, "capture factor mu must be positive");
}

}  // namespace

BlackHole::BlackHole(Quantity mass) : mass_(mass) {
  require_dimension(mass, dim::mass, "black-hole mass");
  if (!(mass.magnitude() > 0.0))
    throw Error(errc::domain, "black-hole mass must be positive");
}

Quantity radius(const BlackHole& bh) {
  const auto& k = constants();
  return 2.0 * k.G * bh.mass() / pow_int(k.c, 2);
}

BlackHole mass_from_radius(const Quantity& r) {
  require_dimension(r, dim::length, "horizon radius");
  if (!(r.magnitude() > 0.0))
    throw Error(errc::domain, "horizon radius must be positive");
  const auto& k = constants();
  return BlackHole(pow_int(k.c, 2) * r / (2.0 * k.G));
}

Quantity horizon_area(const BlackHole& bh) {
  return 4.0 * pi * pow_int(radius(bh), 2);
}

Quantity entropy(const BlackHole& bh) {
  const auto& k = constants();
  return 4.0 * pi * k.k_B * k.G * pow_int(bh.mass(), 2) / (k.c * k.hbar);
}

Quantity entropy_increase(const BlackHole& bh, const Quantity& delta_mass) {
  require_dimension(delta_mass, dim::mass, "mass increment");
  if (delta_mass.magnitude() < 0.0)
    throw Error(errc::domain, "mass increment must be non-negative");
  const auto& k = constants();
  return 8.0 * pi * k.k_B * k.G * bh.mass() * delta_mass / (k.c * k.hbar);
}

Quantity min_capture_momentum(const BlackHole& bh, double mu) {
  require_mu(mu);
  const auto& k = constants();
  return k.hbar / (2.0 * mu * radius(bh));
}

Quantity min_bit_energy(const BlackHole& bh, double mu) {
  return constants().c * min_capture_momentum(bh, mu);
}

Quantity capture_cross_section(const BlackHole& bh, double mu) {
  require_mu(mu);
  return pi * mu * mu * pow_int(radius(bh), 2);
}

InfallingSystem::InfallingSystem(Quantity energy, Quantity rest_mass)
    : energy_(energy), rest_mass_(rest_mass) {
  require_dimension(energy, dim::energy, "system energy");
  require_dimension(rest_mass, dim::mass, "system rest mass");
  if (energy.magnitude() < 0.0)
    throw Error(errc::domain, "system energy must be non-negative");
  if (rest_mass.magnitude() < 0.0)
    throw Error(errc::domain, "system rest mass must be non-negative");
  const Quantity c = constants().c;
  // compare e/c against m0 c, the same factors momentum() is built from,
  // with one ulp of slack so e == m0 c^2 computed either way is accepted
  double e_over_c = (energy / c).magnitude();
  double mc = (rest_mass * c).magnitude();
  if (e_over_c < mc * (1.0 - 4e-16))
    throw Error(errc::domain,
                "system energy is below its rest-mass energy");
}

Quantity momentum(const InfallingSystem& sys) {
  const Quantity c = constants().c;
  Quantity e_over_c = sys.energy() / c;
  Quantity mc = sys.rest_mass() * c;
  // factored form (e/c - mc)(e/c + mc); clamp the small factor at zero so
  // rounding at e = m0 c^2 cannot produce a negative radicand
  Quantity diff = e_over_c - mc;
  if (diff.magnitude() < 0.0) diff = Quantity(0.0, diff.dimension());
  return sqrt(diff * (e_over_c + mc));
}

}  // namespace infobound
