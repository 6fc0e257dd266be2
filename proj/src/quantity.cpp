/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "quantity.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace infobound {

namespace {

struct NamedDimension {
  Dimension dim;
  const char* name;
};

// Names used in diagnostics; anything else falls back to the monomial form.
constexpr NamedDimension kNamed[] = {
    {dim::dimensionless, "dimensionless"},
    {dim::mass, "mass"},
    {dim::length, "length"},
    {dim::time, "time"},
    {dim::temperature, "temperature"},
    {dim::area, "area"},
    {{0, 3, 0, 0}, "volume"},
    {dim::speed, "speed"},
    {dim::momentum, "momentum"},
    {dim::energy, "energy"},
    {dim::power, "power"},
    {dim::entropy, "entropy"},
};

constexpr const char* kBaseSymbol[4] = {"kg", "m", "s", "K"};

}  // namespace

std::string Dimension::monomial() const {
  if (dimensionless()) return "1";
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kBaseSymbol[i];
    if (exp_[i] != 1) {
      out += '^';
      out += std::to_string(exp_[i]);
    }
  }
  return out;
}

std::string Dimension::str() const {
  for (const auto& n : kNamed)
    if (n.dim == *this) return n.name;
  return monomial();
}

Quantity::Quantity(double magnitude, Dimension dimension)
    : magnitude_(magnitude), dimension_(dimension) {
  if (!std::isfinite(magnitude))
    throw Error(errc::overflow, "non-finite magnitude");
}

namespace {

Quantity checked(double magnitude, Dimension dimension, const char* what) {
  if (!std::isfinite(magnitude)) throw Error(errc::overflow, what);
  return Quantity(magnitude, dimension);
}

}  // namespace

Quantity operator*(const Quantity& a, const Quantity& b) {
  return checked(a.magnitude() * b.magnitude(),
                 a.dimension() + b.dimension(), "magnitude overflow");
}

Quantity operator*(double s, const Quantity& a) {
  return checked(s * a.magnitude(), a.dimension(), "magnitude overflow");
}

Quantity operator*(const Quantity& a, double s) { return s * a; }

Quantity operator/(const Quantity& a, const Quantity& b) {
  if (b.magnitude() == 0.0) throw Error(errc::domain, "zero divisor");
  return checked(a.magnitude() / b.magnitude(),
                 a.dimension() - b.dimension(), "magnitude overflow");
}

Quantity operator/(const Quantity& a, double s) {
  if (s == 0.0) throw Error(errc::domain, "zero divisor");
  return checked(a.magnitude() / s, a.dimension(), "magnitude overflow");
}

Quantity operator+(const Quantity& a, const Quantity& b) {
  if (a.dimension() != b.dimension())
    throw Error(errc::dimension, "dimension mismatch (" + a.dimension().str() +
                                     " vs " + b.dimension().str() + ")");
  return checked(a.magnitude() + b.magnitude(), a.dimension(),
                 "magnitude overflow");
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  if (a.dimension() != b.dimension())
    throw Error(errc::dimension, "dimension mismatch (" + a.dimension().str() +
                                     " vs " + b.dimension().str() + ")");
  return checked(a.magnitude() - b.magnitude(), a.dimension(),
                 "magnitude overflow");
}

Quantity operator-(const Quantity& a) {
  return Quantity(-a.magnitude(), a.dimension());
}

Quantity pow_int(const Quantity& a, int k) {
  if (k == 0) return Quantity(1.0, dim::dimensionless);
  if (k < 0 && a.magnitude() == 0.0) throw Error(errc::domain, "zero divisor");
  if (k > 512 || k < -512)
    throw Error(errc::domain, "exponent out of range (|k| > 512)");
  return checked(std::pow(a.magnitude(), k), a.dimension() * k,
                 "magnitude overflow");
}

Quantity sqrt(const Quantity& a) {
  if (a.magnitude() < 0.0) throw Error(errc::domain, "negative radicand");
  if (!a.dimension().all_even())
    throw Error(errc::dimension,
                "non-square dimension (" + a.dimension().str() + ")");
  return Quantity(std::sqrt(a.magnitude()), a.dimension().halved());
}

double ratio(const Quantity& a, const Quantity& unit) {
  if (unit.dimension() != a.dimension())
    throw Error(errc::dimension,
                "dimension mismatch: cannot express " + a.dimension().str() +
                    " in " + unit.dimension().str());
  if (unit.magnitude() == 0.0) throw Error(errc::domain, "zero divisor");
  return a.magnitude() / unit.magnitude();
}

std::string to_string(const Quantity& q, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, q.magnitude());
  std::string out = buf;
  if (!q.dimensionless()) {
    out += ' ';
    out += q.dimension().monomial();
  }
  return out;
}

namespace {

struct Prefix {
  const char* text;
  double factor;
};

// Longest prefixes first so "da" wins over "d" when both could apply.
constexpr Prefix kPrefixes[] = {
    {"da", 1e1},  {"µ", 1e-6},  // two-byte prefixes (µ is UTF-8 C2 B5)
    {"y", 1e-24}, {"z", 1e-21}, {"a", 1e-18}, {"f", 1e-15}, {"p", 1e-12},
    {"n", 1e-9},  {"u", 1e-6},  {"m", 1e-3},  {"c", 1e-2},  {"d", 1e-1},
    {"h", 1e2},   {"k", 1e3},   {"M", 1e6},   {"G", 1e9},   {"T", 1e12},
    {"P", 1e15},  {"E", 1e18},  {"Z", 1e21},  {"Y", 1e24},
};

}  // namespace

UnitTable::UnitTable()
    : entries_{{
          {"m", {Quantity(1.0, dim::length), true}},
          {"s", {Quantity(1.0, dim::time), true}},
          {"g", {Quantity(1e-3, dim::mass), true}},
          {"kg", {Quantity(1.0, dim::mass), false}},  // already prefixed
          {"K", {Quantity(1.0, dim::temperature), true}},
          {"J", {Quantity(1.0, dim::energy), true}},
          {"W", {Quantity(1.0, dim::power), true}},
          // one Boltzmann constant worth of entropy
          {"kB", {Quantity(1.380649e-23, dim::entropy), true}},
          // dimensionless information count
          {"bit", {Quantity(1.0, dim::dimensionless), true}},
      }} {}

const UnitTable& UnitTable::standard() {
  static const UnitTable table;
  return table;
}

const UnitTable::Entry* UnitTable::find(std::string_view symbol) const {
  for (const auto& [name, entry] : entries_)
    if (name == symbol) return &entry;
  return nullptr;
}

std::optional<Quantity> UnitTable::resolve(std::string_view symbol) const {
  if (const Entry* e = find(symbol)) return e->scale;
  for (const Prefix& p : kPrefixes) {
    std::string_view pt = p.text;
    if (symbol.size() <= pt.size() || symbol.substr(0, pt.size()) != pt)
      continue;
    const Entry* e = find(symbol.substr(pt.size()));
    if (e && e->prefixable) return p.factor * e->scale;
  }
  return std::nullopt;
}

}  // namespace infobound
