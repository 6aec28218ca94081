#include "binomoment/classify.hpp"

#include <optional>

namespace binomoment {

namespace {

// Floats that are exactly the double nearest to a rational with a modest
// denominator are compared as that rational; others stay as doubles.
Scalar normalized(const Scalar& x) {
  if (x.is_exact()) return x;
  if (auto q = Rational::reconstruct(x.to_double())) return Scalar(*q);
  return x;
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::MainBranch: return "MainBranch";
    case Branch::ReflectedBranch: return "ReflectedBranch";
    case Branch::RaneyZero: return "RaneyZero";
    case Branch::Outside: return "Outside";
  }
  return "Outside";
}

RegionVerdict classify_binomial(const Scalar& p_in, const Scalar& r_in) {
  const Scalar p = normalized(p_in);
  const Scalar r = normalized(r_in);
  const Scalar one(1), zero(0);
  if (p >= one && r >= -one && r <= p - one) return {true, Branch::MainBranch};
  if (p <= zero && r >= p - one && r <= zero) return {true, Branch::ReflectedBranch};
  return {false, Branch::Outside};
}

RegionVerdict classify_raney(const Scalar& p_in, const Scalar& r_in) {
  const Scalar p = normalized(p_in);
  const Scalar r = normalized(r_in);
  const Scalar one(1), zero(0);
  if (p >= one && r >= zero && r <= p) return {true, Branch::MainBranch};
  if (p <= zero && r >= p - one && r <= zero) return {true, Branch::ReflectedBranch};
  if (r.is_zero()) return {true, Branch::RaneyZero};
  return {false, Branch::Outside};
}

Scalar hankel2_binomial(const Scalar& p, const Scalar& r) {
  return Scalar(2) * p * p - Scalar(2) * p - r - r * r;
}

Scalar hankel2_raney(const Scalar& p, const Scalar& r) {
  return r * (Scalar(2) * p - r - Scalar(1));
}

}  // namespace binomoment
