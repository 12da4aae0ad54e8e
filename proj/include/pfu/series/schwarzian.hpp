#pragma once

#include "pfu/exact/ratfunc.hpp"
#include "pfu/series/power_series.hpp"

namespace pfu {

/// {w; x} = (3 w''^2 - 2 w' w''') / (4 w'^2) for a rational function w.
inline RationalFunction schwarzian(const RationalFunction& w) {
  RationalFunction d1 = w.derivative();
  if (d1.is_zero()) throw ConstantInput("Schwarzian of a constant");
  RationalFunction d2 = d1.derivative(), d3 = d2.derivative();
  return (RationalFunction(3) * d2 * d2 - RationalFunction(2) * d1 * d3) / (RationalFunction(4) * d1 * d1);
}

}  // namespace pfu
