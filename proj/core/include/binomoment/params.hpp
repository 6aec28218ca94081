#pragma once

#include "binomoment/rational.hpp"
#include "binomoment/scalar.hpp"

namespace binomoment {

/// The pair (p, r) with p = k/l reduced (gcd(k, l) = 1, l >= 1).
struct Params {
  Rational p;
  Scalar r;

  Params(Rational p_value, Scalar r_value) : p(std::move(p_value)), r(std::move(r_value)) {}

  long k() const { return p.numerator().get_si(); }
  long l() const { return p.denominator().get_si(); }
  double r_value() const { return r.to_double(); }
  double p_value() const { return p.to_double(); }

  /// Throws RegionError unless p > 1, i.e. k > l.
  void require_p_above_one() const;
  /// True when -1 < r <= p - 1 (the absolutely continuous region for p > 1).
  bool in_open_region() const;
};

}  // namespace binomoment
