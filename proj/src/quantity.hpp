/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace infobound {

/// Integer exponent vector over the SI base dimensions (mass, length, time,
/// temperature). Forms an abelian group under +; the identity is the
/// dimensionless vector.
class Dimension {
public:
  constexpr Dimension() = default;
  constexpr Dimension(int mass, int length, int time, int temperature)
      : exp_{mass, length, time, temperature} {}

  constexpr int mass() const { return exp_[0]; }
  constexpr int length() const { return exp_[1]; }
  constexpr int time() const { return exp_[2]; }
  constexpr int temperature() const { return exp_[3]; }
  constexpr const std::array<int, 4>& exponents() const { return exp_; }

  constexpr bool dimensionless() const { return *this == Dimension{}; }
  constexpr bool all_even() const {
    return exp_[0] % 2 == 0 && exp_[1] % 2 == 0 && exp_[2] % 2 == 0 &&
           exp_[3] % 2 == 0;
  }

  friend constexpr Dimension operator+(Dimension a, Dimension b) {
    return {a.exp_[0] + b.exp_[0], a.exp_[1] + b.exp_[1],
            a.exp_[2] + b.exp_[2], a.exp_[3] + b.exp_[3]};
  }
  friend constexpr Dimension operator-(Dimension a, Dimension b) {
    return {a.exp_[0] - b.exp_[0], a.exp_[1] - b.exp_[1],
            a.exp_[2] - b.exp_[2], a.exp_[3] - b.exp_[3]};
  }
  friend constexpr Dimension operator-(Dimension a) {
    return Dimension{} - a;
  }
  /// Exponent scaling, used by integer powers.
  friend constexpr Dimension operator*(Dimension a, int k) {
    return {a.exp_[0] * k, a.exp_[1] * k, a.exp_[2] * k, a.exp_[3] * k};
  }
  constexpr Dimension halved() const {
    return {exp_[0] / 2, exp_[1] / 2, exp_[2] / 2, exp_[3] / 2};
  }

  friend constexpr bool operator==(Dimension, Dimension) = default;

  /// Human-readable name: "length", "energy", ... for common dimensions,
  /// otherwise a base-unit monomial such as "kg m^2 s^-3 K^-1".
  std::string str() const;
  /// Base-unit monomial ("kg m^2 s^-2"); "1" when dimensionless.
  std::string monomial() const;

private:
  std::array<int, 4> exp_{0, 0, 0, 0};
};

namespace dim {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension mass{1, 0, 0, 0};
inline constexpr Dimension length{0, 1, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0};
inline constexpr Dimension temperature{0, 0, 0, 1};
inline constexpr Dimension area{0, 2, 0, 0};
inline constexpr Dimension speed{0, 1, -1, 0};
inline constexpr Dimension momentum{1, 1, -1, 0};
inline constexpr Dimension energy{1, 2, -2, 0};
inline constexpr Dimension power{1, 2, -3, 0};
inline constexpr Dimension entropy{1, 2, -2, -1};
}  // namespace dim

/// A finite real magnitude in SI base units, paired with its Dimension.
/// Construction rejects NaN and infinity, so a Quantity is always finite.
class Quantity {
public:
  constexpr Quantity() = default;  // zero, dimensionless
  Quantity(double magnitude, Dimension dimension);

  double magnitude() const { return magnitude_; }
  const Dimension& dimension() const { return dimension_; }
  bool dimensionless() const { return dimension_.dimensionless(); }

private:
  double magnitude_ = 0.0;
  Dimension dimension_{};
};

Quantity operator*(const Quantity& a, const Quantity& b);
Quantity operator*(double s, const Quantity& a);
Quantity operator*(const Quantity& a, double s);
Quantity operator/(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, double s);
Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a);

/// a^k with exponent-scaled dimension. k = 0 gives dimensionless 1.
Quantity pow_int(const Quantity& a, int k);
/// Square root; requires a non-negative magnitude and even exponents.
Quantity sqrt(const Quantity& a);
/// Magnitude of `a` expressed in multiples of `unit` (same dimension).
double ratio(const Quantity& a, const Quantity& unit);

/// "1485.23 m" style display string (not necessarily re-parseable).
std::string to_string(const Quantity& q, int significant_digits = 6);

/// Unit symbols resolvable in quantity expressions: SI base and derived
/// symbols plus the pseudo-units `kB` (one Boltzmann constant of entropy)
/// and `bit` (dimensionless count). A symbol not found verbatim is split as
/// SI-prefix + symbol, longest prefix first, so "ms" is always millisecond.
class UnitTable {
public:
  static const UnitTable& standard();

  /// SI scale of a (possibly prefixed) unit symbol, or nullopt if unknown.
  std::optional<Quantity> resolve(std::string_view symbol) const;

private:
  UnitTable();
  struct Entry {
    Quantity scale;
    bool prefixable;
  };
  const Entry* find(std::string_view symbol) const;
  std::array<std::pair<std::string, Entry>, 9> entries_;
};

}  // namespace infobound
