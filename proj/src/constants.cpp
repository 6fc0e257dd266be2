/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "constants.hpp"

#include <numbers>

namespace infobound {

const PhysicalConstants& constants() {
  static const PhysicalConstants table{
      Quantity(299792458.0, dim::speed),
      Quantity(6.62607015e-34 / (2.0 * std::numbers::pi),
               dim::energy + dim::time),
      Quantity(6.67430e-11, Dimension{-1, 3, -2, 0}),
      Quantity(1.380649e-23, dim::entropy),
  };
  return table;
}

}  // namespace infobound
