#pragma once

#include <string>

#include "stcalc/quadext.hpp"

namespace stcalc {

struct ExtNumeric {
  bool exact = false;
  BigRat value;        // set when exact
  std::string approx;  // decimal rendering, always set
  unsigned precision_bits = 0;
  double as_double = 0.0;
};

// Substitutes s = s0, t = t0; the result must be constant.
BigRat eval_at(const RatFunc& x, const BigRat& s0, const BigRat& t0);
// Exact when the discriminant evaluates to a rational square, otherwise a
// floating value rounded to `bits` of precision.
ExtNumeric eval_at(const QuadExt& x, const BigRat& s0, const BigRat& t0, unsigned bits = 256);

}  // namespace stcalc
