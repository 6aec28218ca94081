#include "binomoment/params.hpp"

#include "binomoment/errors.hpp"

namespace binomoment {

void Params::require_p_above_one() const {
  if (p <= Rational(1)) throw RegionError("p = " + p.str() + " must exceed 1");
}

bool Params::in_open_region() const {
  const Scalar upper = Scalar(p) - Scalar(1);
  return r > Scalar(-1) && r <= upper;
}

}  // namespace binomoment
