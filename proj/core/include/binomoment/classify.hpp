#pragma once

#include <string_view>

#include "binomoment/scalar.hpp"

namespace binomoment {

enum class Branch {
  MainBranch,       // p >= 1
  ReflectedBranch,  // p <= 0
  RaneyZero,        // r = 0 outside the other branches (delta_0)
  Outside,
};

struct RegionVerdict {
  bool positive_definite = false;
  Branch branch = Branch::Outside;

  friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

std::string_view to_string(Branch b);

/// binom(np + r, n) is positive definite iff p >= 1, -1 <= r <= p - 1 or
/// p <= 0, p - 1 <= r <= 0. Boundaries are inclusive.
RegionVerdict classify_binomial(const Scalar& p, const Scalar& r);

/// The Raney sequence is positive definite iff p >= 1, 0 <= r <= p, or
/// p <= 0, p - 1 <= r <= 0, or r = 0.
RegionVerdict classify_raney(const Scalar& p, const Scalar& r);

/// 2p^2 - 2p - r - r^2: twice the 2x2 Hankel determinant of the binomial
/// sequence.
Scalar hankel2_binomial(const Scalar& p, const Scalar& r);

/// r (2p - r - 1): the 2x2 Hankel determinant criterion for Raney sequences
/// (up to a positive factor).
Scalar hankel2_raney(const Scalar& p, const Scalar& r);

}  // namespace binomoment
